#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mspec/bits.hpp"
#include "mspec/semilattice.hpp"

namespace mspec {

constexpr int kMaxPointsHard = 31;  // point sets live in a Mask

// A join-semilattice with a total closure map on elements.
struct ClosureSemilattice {
  FiniteJoinSemilattice lattice;
  std::vector<int> closure;  // K per element index

  int size() const { return lattice.size(); }
  int K(int a) const { return closure[a]; }
};

struct ClosureLawViolation {
  std::string law;  // "extensivity", "idempotence", "isotonicity"
  int a = -1, b = -1;
};

// Checks extensive / idempotent / isotone exhaustively; the join table is
// assumed valid. Shape problems throw InputError.
std::optional<ClosureLawViolation> validate_closure_semilattice(
    const ClosureSemilattice& s);

// A finite closure space presented by its family of closed sets. The family
// must contain the ground set and be closed under binary intersection; the
// empty set need not be closed. The closure operator on subsets is derived
// (space_closure), not stored.
struct ClosureSpace {
  std::vector<std::string> points;
  std::vector<Mask> closed;  // ascending by mask, no duplicates

  int size() const { return static_cast<int>(points.size()); }
  Mask full() const { return (Mask{1} << points.size()) - 1; }
};

// Smallest closed superset of x: intersection of all closed sets containing
// x, with the ground set as the intersection of the empty family.
Mask space_closure(const ClosureSpace& sp, Mask x);

struct SpaceViolation {
  std::string law;  // "ground-set-missing", "intersection-missing"
  Mask c = 0, d = 0;
};

std::optional<SpaceViolation> validate_closure_space(const ClosureSpace& sp);

}  // namespace mspec
