#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mspec/bits.hpp"
#include "mspec/semilattice.hpp"

namespace mspec {

// Exhaustive relation algorithms are exponential in the carrier, so the
// dense pair table is capped hard at this carrier size.
constexpr int kMaxRelationCarrier = 22;

// A multi-argument specialization relation in set-based form: a set of pairs
// (lhs element, nonempty rhs subset). Storing the rhs as a set makes the
// permutation and duplicate-absorption axioms hold by construction.
//
// Layout: for every rhs mask, the set of lhs elements related to it, as a
// bitmask. Dense over all 2^n masks.
class SpecRelation {
 public:
  explicit SpecRelation(int carrier);

  int carrier() const { return carrier_; }

  bool contains(int lhs, Mask rhs) const { return has_bit(lhs_[rhs], lhs); }

  // Bitmask of all lhs elements related to this rhs set.
  Mask lhs_set(Mask rhs) const { return lhs_[rhs]; }

  void add(int lhs, Mask rhs);

  std::size_t pair_count() const { return pairs_; }

  bool operator==(const SpecRelation& o) const = default;

  // True if every pair of this relation is in `o`.
  bool subrelation_of(const SpecRelation& o) const;

  // Visits pairs in canonical (lhs index, rhs mask) lexicographic order.
  template <typename F>
  void for_each(F f) const {
    const Mask full = (Mask{1} << carrier_) - 1;
    for (int a = 0; a < carrier_; ++a)
      for (Mask m = 1; m <= full; ++m)
        if (contains(a, m)) f(a, m);
  }

 private:
  int carrier_;
  std::size_t pairs_ = 0;
  std::vector<Mask> lhs_;  // indexed by rhs mask
};

// Canonical set-based relation from (lhs, rhs-sequence) tuples given as
// element indices. Rejects empty rhs sequences and out-of-range indices.
SpecRelation normalize_spec_relation(
    int carrier, const std::vector<std::pair<int, std::vector<int>>>& tuples);

// A join-semilattice together with a specialization relation over its
// carrier. Whether the relation satisfies the axioms is checked separately
// (see axioms.hpp); files may carry unsaturated seed relations.
struct SpecStructure {
  FiniteJoinSemilattice lattice;
  SpecRelation rel;

  int size() const { return lattice.size(); }
};

}  // namespace mspec
