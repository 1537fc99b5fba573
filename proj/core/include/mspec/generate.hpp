#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mspec/closure.hpp"
#include "mspec/hom.hpp"
#include "mspec/relation.hpp"
#include "mspec/represent.hpp"

namespace mspec {

constexpr int kMaxEnumPoints = 4;       // closure-system enumeration
constexpr int kMaxEnumCarrier = 5;      // semilattice enumeration up to iso
constexpr std::size_t kMaxHomMaps = 1u << 20;  // |T|^|M| enumeration cap

// Deterministic random source. splitmix64: the output stream is fixed by
// the algorithm's published constants, so identical configs reproduce
// identical corpora on any implementation. Test vectors in the docs.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, n); n > 0. Rejection-free (biased below 2^-40 for the
  // tiny n used here, which is fine for corpus generation).
  std::uint64_t next_below(std::uint64_t n);
  // True with probability p (exact at p = 0 and p = 1).
  bool next_bernoulli(double p);

 private:
  std::uint64_t state_;
};

struct GenConfig {
  int size = 5;               // carrier / point bound
  std::uint64_t seed = 0;     // random source seed
  double density = 0.5;       // seeded-relation density in [0, 1]
};

// Every intersection-closed family on n points containing the ground set,
// exactly once, in canonical (family bitmask) order. n <= kMaxEnumPoints.
std::vector<ClosureSpace> enum_closure_systems(int n);

// Every join-semilattice on n elements up to isomorphism, deduplicated by
// the minimal join table over all carrier permutations, in canonical order.
// n <= kMaxEnumCarrier.
std::vector<FiniteJoinSemilattice> enum_join_semilattices(int n);

// Samples a union-closed family of subsets of a cfg.size-point ground set,
// read as a join-semilattice (at most cfg.size elements). Deterministic in
// the config.
FiniteJoinSemilattice random_join_semilattice(const GenConfig& cfg);

// Random lattice plus seed pairs drawn at cfg.density, saturated. Always
// passes check_axioms.
SpecStructure random_spec_structure(const GenConfig& cfg);

// All maps preserving join and every relation, in lexicographic map order.
// Throws when |T|^|M| exceeds kMaxHomMaps.
std::vector<Homomorphism> enum_homomorphisms(const SpecStructure& m,
                                             const SpecStructure& t);

struct TopoGapSearchResult {
  ClosureSpace space;
  TopoGap gap;
};

// Smallest closure space (by point count, then enumeration order) whose
// closure is not topological, with its witness triple. bound <=
// kMaxEnumPoints.
std::optional<TopoGapSearchResult> search_topo_gap(int bound);

struct NonRegularSearchResult {
  SpecStructure structure;
  int lhs = -1;
  Mask rhs = 0;
};

// Smallest saturated single-seed structure (by carrier size, then canonical
// lattice order, then seed order) that fails regularity. bound <=
// kMaxEnumCarrier.
std::optional<NonRegularSearchResult> search_non_regular(int bound);

}  // namespace mspec
