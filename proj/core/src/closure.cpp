#include "mspec/closure.hpp"

#include <algorithm>
#include <string>

#include "mspec/error.hpp"

namespace mspec {

std::optional<ClosureLawViolation> validate_closure_semilattice(
    const ClosureSemilattice& s) {
  const int n = s.size();
  if (s.closure.size() != static_cast<std::size_t>(n))
    throw InputError(ErrorKind::Schema, "closure map must be total");
  for (int v : s.closure)
    if (v < 0 || v >= n)
      throw InputError(ErrorKind::UnknownElement,
                       "closure value out of range");
  for (int a = 0; a < n; ++a)
    if (!s.lattice.leq(a, s.K(a)))
      return ClosureLawViolation{"extensivity", a, -1};
  for (int a = 0; a < n; ++a)
    if (s.K(s.K(a)) != s.K(a))
      return ClosureLawViolation{"idempotence", a, -1};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (s.lattice.leq(a, b) && !s.lattice.leq(s.K(a), s.K(b)))
        return ClosureLawViolation{"isotonicity", a, b};
  return std::nullopt;
}

Mask space_closure(const ClosureSpace& sp, Mask x) {
  if (!subset_of(x, sp.full()))
    throw InputError(ErrorKind::UnknownElement,
                     "subset contains points outside the ground set");
  Mask acc = sp.full();
  for (Mask c : sp.closed)
    if (subset_of(x, c)) acc &= c;
  return acc;
}

std::optional<SpaceViolation> validate_closure_space(const ClosureSpace& sp) {
  if (sp.size() > kMaxPointsHard)
    throw InputError(ErrorKind::Cap,
                     "point set exceeds the hard limit of " +
                         std::to_string(kMaxPointsHard));
  for (Mask c : sp.closed)
    if (!subset_of(c, sp.full()))
      throw InputError(ErrorKind::UnknownElement,
                       "closed set contains points outside the ground set");
  if (!std::is_sorted(sp.closed.begin(), sp.closed.end()))
    throw InputError(ErrorKind::Schema, "closed family must be sorted");
  if (std::adjacent_find(sp.closed.begin(), sp.closed.end()) !=
      sp.closed.end())
    throw InputError(ErrorKind::Schema, "closed family has duplicates");

  if (std::find(sp.closed.begin(), sp.closed.end(), sp.full()) ==
      sp.closed.end())
    return SpaceViolation{"ground-set-missing", 0, 0};
  for (Mask c : sp.closed)
    for (Mask d : sp.closed) {
      if (c >= d) continue;
      Mask inter = c & d;
      if (!std::binary_search(sp.closed.begin(), sp.closed.end(), inter))
        return SpaceViolation{"intersection-missing", c, d};
    }
  return std::nullopt;
}

}  // namespace mspec
