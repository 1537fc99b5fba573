#include "mspec/relation.hpp"

#include <string>

#include "mspec/error.hpp"

namespace mspec {

SpecRelation::SpecRelation(int carrier) : carrier_(carrier) {
  if (carrier <= 0)
    throw InputError(ErrorKind::Schema, "carrier must be nonempty");
  if (carrier > kMaxRelationCarrier)
    throw InputError(ErrorKind::Cap,
                     "carrier of " + std::to_string(carrier) +
                         " exceeds the relation limit of " +
                         std::to_string(kMaxRelationCarrier));
  lhs_.assign(std::size_t{1} << carrier, 0);
}

void SpecRelation::add(int lhs, Mask rhs) {
  if (lhs < 0 || lhs >= carrier_)
    throw InputError(ErrorKind::UnknownElement, "lhs index out of range");
  if (rhs == 0)
    throw InputError(ErrorKind::Schema, "rhs set must be nonempty");
  if (rhs >= (Mask{1} << carrier_))
    throw InputError(ErrorKind::UnknownElement, "rhs set out of range");
  if (!has_bit(lhs_[rhs], lhs)) {
    lhs_[rhs] |= bit(lhs);
    ++pairs_;
  }
}

bool SpecRelation::subrelation_of(const SpecRelation& o) const {
  if (carrier_ != o.carrier_) return false;
  for (std::size_t m = 1; m < lhs_.size(); ++m)
    if ((lhs_[m] & ~o.lhs_[m]) != 0) return false;
  return true;
}

SpecRelation normalize_spec_relation(
    int carrier, const std::vector<std::pair<int, std::vector<int>>>& tuples) {
  SpecRelation rel(carrier);
  for (const auto& [lhs, rhs] : tuples) {
    if (rhs.empty())
      throw InputError(ErrorKind::Schema, "rhs sequence must be nonempty");
    Mask m = 0;
    for (int e : rhs) {
      if (e < 0 || e >= carrier)
        throw InputError(ErrorKind::UnknownElement, "rhs index out of range");
      m |= bit(e);
    }
    rel.add(lhs, m);
  }
  return rel;
}

}  // namespace mspec
