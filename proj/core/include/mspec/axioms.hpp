#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mspec/bits.hpp"
#include "mspec/closure.hpp"
#include "mspec/relation.hpp"

namespace mspec {

// One witness shape covers every axiom and derived law; which fields are
// meaningful depends on the law. Element fields use -1 for "unused", mask
// fields 0 (rhs sets are nonempty, so 0 never collides with a real witness).
struct LawWitness {
  int a = -1, a1 = -1, b = -1, c = -1, x = -1;
  Mask B = 0, C = 0;
};

struct LawVerdict {
  std::string law;
  bool ok = true;
  bool by_representation = false;  // M4/M5 hold by the set-based encoding
  LawWitness witness;              // meaningful only when !ok
};

struct LawReport {
  bool ok = true;
  std::vector<LawVerdict> verdicts;

  const LawVerdict* find(const std::string& law) const;
};

// Decides the defining axioms on a candidate structure. The rhs-set form
// discharges the permutation and duplicate-absorption axioms by
// construction; they are reported as passing by representation. Witnesses
// are the first failures in (lhs index, rhs mask) lexicographic order.
LawReport check_axioms(const SpecStructure& s);

// Verifies the eight consequences of the axioms (monotone transport along
// <= and the relation, the pointwise replacement law, the upper-bound law,
// and the join-collapse laws) exhaustively, with rhs sets ranging over all
// nonempty carrier subsets. On a structure passing check_axioms every one
// of these must hold; a failure indicates an implementation defect.
LawReport check_derived_laws(const SpecStructure& s);

// Least relation containing the seed, all reflexivity facts, and closed
// under the replacement, order-transport, weakening and join rules.
// Worklist fixpoint over the finite space of (element, nonempty subset)
// pairs; always terminates.
SpecRelation saturate(const FiniteJoinSemilattice& lat,
                      const SpecRelation& seed);

struct ClosureTable {
  std::vector<int> closure;  // K per element
  bool principal = false;
  int offending = -1;  // element whose closure candidate fails, if any
  std::optional<ClosureLawViolation> law_violation;
};

// For each x, the join of {y | y related to {x}} -- the largest element
// below x in the specialization preorder. Finite structures satisfying the
// axioms are always principal; this verifies rather than assumes, reporting
// the offending element if the candidate fails, and checks the closure laws
// on the resulting table.
ClosureTable principal_closure_table(const SpecStructure& s);

struct RegularityReport {
  bool regular = false;
  // Witness for a pair related without the closure-join bound holding.
  std::optional<std::pair<int, Mask>> witness;
  // A pair satisfying the bound but missing from the relation. Cannot
  // happen on inputs passing check_axioms; kept as a defect trap.
  std::optional<std::pair<int, Mask>> reverse_defect;
  ClosureTable table;
};

// True iff the relation coincides with "lhs <= join of the closures of the
// rhs" everywhere. Requires a principal structure.
RegularityReport check_regular(const SpecStructure& s);

}  // namespace mspec
