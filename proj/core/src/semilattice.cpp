#include "mspec/semilattice.hpp"

#include <string>
#include <unordered_set>

#include "mspec/error.hpp"

namespace mspec {

namespace {

void check_shape(const FiniteJoinSemilattice& lat) {
  const int n = lat.size();
  if (n == 0)
    throw InputError(ErrorKind::Schema, "carrier must be nonempty");
  if (lat.table.size() != static_cast<std::size_t>(n) * n)
    throw InputError(ErrorKind::Schema,
                     "join table must have " + std::to_string(n) + "x" +
                         std::to_string(n) + " entries");
  for (int v : lat.table)
    if (v < 0 || v >= n)
      throw InputError(ErrorKind::Schema, "join table entry out of range");
  std::unordered_set<std::string> seen;
  for (const auto& name : lat.elements)
    if (!seen.insert(name).second)
      throw InputError(ErrorKind::Schema, "duplicate element name: " + name);
}

}  // namespace

int FiniteJoinSemilattice::join_set(Mask s) const {
  if (s == 0)
    throw InputError(ErrorKind::Usage, "join of the empty set is undefined");
  int acc = lowest_bit(s);
  for_each_bit(s & (s - 1), [&](int i) { acc = join(acc, i); });
  return acc;
}

Mask FiniteJoinSemilattice::down_set(int a) const {
  Mask m = 0;
  for (int y = 0; y < size(); ++y)
    if (leq(y, a)) m |= bit(y);
  return m;
}

int FiniteJoinSemilattice::top() const {
  return join_set((Mask{1} << size()) - 1);
}

int FiniteJoinSemilattice::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == name) return i;
  return -1;
}

std::optional<TableViolation> validate_join_table(
    const FiniteJoinSemilattice& lat) {
  check_shape(lat);
  const int n = lat.size();
  for (int a = 0; a < n; ++a)
    if (lat.join(a, a) != a) return TableViolation{"idempotence", a, a, -1};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (lat.join(a, b) != lat.join(b, a))
        return TableViolation{"commutativity", a, b, -1};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (lat.join(lat.join(a, b), c) != lat.join(a, lat.join(b, c)))
          return TableViolation{"associativity", a, b, c};
  return std::nullopt;
}

}  // namespace mspec
