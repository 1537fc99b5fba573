#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mspec/axioms.hpp"
#include "mspec/closure.hpp"
#include "mspec/hom.hpp"
#include "mspec/relation.hpp"

namespace mspec {

// The pair space is n * 2^n, and the preorder matrix is quadratic in that,
// so the base carrier is capped hard.
constexpr int kMaxExtensionCarrier = 10;
// Quotient classes carry dense join/closure tables.
constexpr int kMaxClasses = 2048;
// Materializing the class relation enumerates all 2^C rhs sets.
constexpr int kMaxClassesForRelation = 20;
// The congruence audit is cubic in the pair space.
constexpr int kMaxAuditCarrier = 6;

// A point of the pre-quotient space: a base element plus a finite (possibly
// empty) bag of elements whose closures are to be adjoined.
struct PairElement {
  int base = 0;
  Mask bag = 0;

  bool operator==(const PairElement&) const = default;
};

// The defining preorder on pairs: p is below q iff
//  (1) some element d related to q's bag satisfies p.base <= q.base v d
//      (just p.base <= q.base when q's bag is empty), and
//  (2) every element of p's bag is related, as a singleton, to some element
//      of q's bag.
// The witness d is found by scanning the full carrier; no indexing.
bool pair_leq(const SpecStructure& m, PairElement p, PairElement q);

// The quotient of the pair space by mutual pair_leq, carrying a join, a
// closure, relations, and the unit map from the parent. Classes are ordered
// by their canonical representative, the least member under (base index,
// bag mask).
class FreeExtension {
 public:
  struct ClassInfo {
    PairElement rep;
    std::vector<PairElement> members;  // sorted by (base, bag)
    std::string label;                 // "base" or "base+K{b1,...}"
  };

  const SpecStructure& parent() const { return parent_; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  const std::vector<ClassInfo>& classes() const { return classes_; }

  int class_of(PairElement p) const;
  int join(int i, int j) const { return join_[i * class_count() + j]; }
  bool leq(int i, int j) const { return join(i, j) == j; }
  int K(int i) const { return closure_[i]; }
  int unit(int a) const { return unit_[a]; }
  const std::vector<int>& unit_table() const { return unit_; }

  // Membership in the class relation: lhs below the join of the closures of
  // the rhs classes. This is the relation's definition, so it needs no
  // materialized table and works at any class count.
  bool rel_member(int lhs, std::span<const int> rhs) const;

  FiniteJoinSemilattice as_lattice() const;
  ClosureSemilattice as_closure_semilattice() const;
  // Explicit relation over classes; capped at kMaxClassesForRelation.
  SpecStructure as_spec_structure() const;

 private:
  friend FreeExtension build_free_extension(const SpecStructure&, int);
  explicit FreeExtension(SpecStructure parent) : parent_(std::move(parent)) {}
  SpecStructure parent_;
  std::vector<ClassInfo> classes_;
  std::vector<int> join_;
  std::vector<int> closure_;
  std::vector<int> unit_;
  std::vector<int> pair_class_;  // pair id (base << n | bag) -> class index
};

// Enumerates all base * 2^base pairs, computes the preorder, quotients by
// its strongly connected components, and assembles the componentwise join,
// the closure and the unit map. `max_carrier` guards the exponential blowup
// (hard limit kMaxExtensionCarrier).
FreeExtension build_free_extension(const SpecStructure& m,
                                   int max_carrier = 8);

// The unit map as a checked homomorphism from the parent into the
// extension: injective, join-preserving, preserving and reflecting every
// relation with rhs sets over the full parent carrier.
HomReport unit_embedding(const FreeExtension& e);

struct LiftResult {
  std::vector<int> map;  // extension class -> target element
  bool well_defined = false;
  bool join_preserving = false;
  bool closure_preserving = false;
  bool commutes = false;
  bool ok = false;
  // True/false when the brute-force uniqueness sweep ran; empty when the
  // candidate space exceeded the cap and only existence was checked.
  std::optional<bool> unique;
  std::optional<std::pair<int, PairElement>> witness;  // class + member
};

// The universal lift of a homomorphism eta into a principal regular target:
// class [a, {b1,...,bh}] goes to eta(a) joined with the target closures of
// the eta(bi). Verifies well-definedness on all class members, preservation
// of join and closure, and that the lift composed with the unit gives back
// eta; optionally certifies uniqueness by enumerating every commuting
// candidate. Throws InputError if the target is not regular or eta is not a
// homomorphism.
LiftResult lift_homomorphism(const FreeExtension& ext,
                             const SpecStructure& target,
                             const Homomorphism& eta);
LiftResult lift_homomorphism(const SpecStructure& m,
                             const SpecStructure& target,
                             const Homomorphism& eta);

// Functorial lift between extensions: the lift of (unit of U after psi),
// landing in U's extension. Also checks the square against the two unit
// maps pointwise.
LiftResult lift_between_extensions(const FreeExtension& ext_m,
                                   const FreeExtension& ext_u,
                                   const Homomorphism& psi);

struct QuotientAuditReport {
  bool ok = true;
  std::string check;  // failing check name, empty when ok
  PairElement p, q, r;
};

// Verifies, over the whole pair space: reflexivity and transitivity of the
// preorder; that collapsing a pair to its single joined closure respects
// the preorder (well-definedness of the closure on classes); compatibility
// of the equivalence with componentwise join; and agreement of the class
// order with the representative preorder. Any failure is a defect report.
QuotientAuditReport audit_pair_quotient(const SpecStructure& m);

}  // namespace mspec
