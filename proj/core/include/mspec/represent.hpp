#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mspec/closure.hpp"
#include "mspec/extension.hpp"
#include "mspec/relation.hpp"

namespace mspec {

// Kuratowski-style checks enumerate subset pairs (and triples for the gap
// search), so they get a tighter cap than general space operations.
constexpr int kMaxTopoPoints = 8;

// The specialization structure induced on a closure semilattice: lhs related
// to a set iff lhs is below the join of the closures of its members. The
// result is principal and regular.
SpecStructure reduct_of_closure_semilattice(const ClosureSemilattice& s);

// The specialization structure on the powerset of a closure space: carrier
// P(X) with union as join, and a related to B iff a is inside the union of
// the closures of B's members. The carrier has 2^|X| elements; capped by
// `max_elements`.
SpecStructure reduct_of_closure_space(const ClosureSpace& sp,
                                      int max_elements = 12);

// An embedding of a structure into a concrete closure space: element ->
// point subset.
struct SpaceEmbedding {
  ClosureSpace space;
  std::vector<std::string> source_names;
  std::vector<Mask> map;  // per source element

  bool verified = false;
  std::string failure;  // human-oriented description when !verified
};

// Embeds a closure semilattice into a closure space on its own carrier:
// an element goes to the set of elements it is not below; closed sets are
// the images of closure-fixed elements, closed under intersection, plus the
// ground set. Verifies injectivity, join-to-union, order reflection, and
// compatibility of the two closures. `max_points` caps the ground set.
SpaceEmbedding embed_closure_semilattice(const ClosureSemilattice& s,
                                         int max_points = 16);

struct Representation {
  SpaceEmbedding embedding;  // ground set: extension class labels
  std::vector<int> unit;     // parent element -> class index
  std::vector<std::string> parent_names;
  std::vector<Mask> iota;    // parent element -> point set
  int ground_size = 0;
  bool verified = false;     // relation preserved and reflected end to end
  std::optional<std::pair<int, Mask>> witness;
};

// Full representation inside a closure space: build the free extension,
// read it as a closure semilattice, embed that, and compose with the unit.
// Verifies that the original relation coincides with containment in the
// union of point-set closures, for every (lhs, rhs-set) over the parent.
Representation represent(const SpecStructure& m, int max_carrier = 8,
                         int max_points = 16);

// True iff the closure distributes over binary union and fixes the empty
// set, for all subset pairs. Capped at kMaxTopoPoints.
bool topological_check(const ClosureSpace& sp);

struct TopoGap {
  Mask a = 0, b = 0, c = 0;
};

// Smallest (a, b, c) in lexicographic subset order with a inside the
// closure of b union c but not inside the union of the two closures; none
// when the space behaves topologically. Capped at kMaxTopoPoints.
std::optional<TopoGap> topo_gap_witness(const ClosureSpace& sp);

}  // namespace mspec
