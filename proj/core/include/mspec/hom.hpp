#pragma once

#include <optional>
#include <vector>

#include "mspec/bits.hpp"
#include "mspec/relation.hpp"

namespace mspec {

// A total map between structure carriers, by index.
struct Homomorphism {
  std::vector<int> map;

  int operator()(int a) const { return map[a]; }
};

// Image of a source subset under the map.
Mask mask_image(const Homomorphism& h, Mask s);

struct HomReport {
  bool ok = false;         // join-preserving and relation-preserving
  bool embedding = false;  // ok + injective + reflects <= and all relations

  bool injective = false;
  // First failures, when present. Pairs/witnesses are source-side indices.
  std::optional<std::pair<int, int>> join_violation;
  std::optional<std::pair<int, Mask>> rel_violation;          // preservation
  std::optional<std::pair<int, int>> order_reflect_violation;
  std::optional<std::pair<int, Mask>> rel_reflect_violation;
};

// Checks that the map preserves joins and every relation; the embedding flag
// additionally requires injectivity and reflection of <= and of every
// relation (rhs sets ranging over the full source carrier). A map of the
// wrong length throws InputError.
HomReport check_homomorphism(const SpecStructure& src,
                             const SpecStructure& dst,
                             const Homomorphism& h);

}  // namespace mspec
