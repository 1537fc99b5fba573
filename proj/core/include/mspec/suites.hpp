#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mspec/generate.hpp"
#include "mspec/relation.hpp"

namespace mspec {

// Named instances used across suites and docs.

// Carrier {e}, relation {(e,{e})}.
SpecStructure make_one_element();
// Two-element chain 0 < 1 with the total relation.
SpecStructure make_two_chain_total();
// Carrier {a,b,c,s,u} with b v c = s and a v b = a v c = a v s = u,
// saturated from the single seed (a,{b,c}). Principal but not regular:
// a is related to {b,c} yet not below Kb v Kc = s.
SpecStructure make_five_element_witness();
// The witness's single-pair seed, unsaturated.
SpecStructure make_five_element_witness_seed();

// The shared random corpus: `count` structures cycling carrier bounds
// 1..max_size across the given densities, deterministically from `seed`.
std::vector<SpecStructure> random_corpus(int count, int max_size,
                                         const std::vector<double>& densities,
                                         std::uint64_t seed);

struct SuiteResult {
  std::string suite;
  int cases = 0;
  std::vector<std::string> failures;  // deterministic order

  bool ok() const { return failures.empty(); }
};

// Property suites exposed by the `verify` CLI verb and reused by the
// acceptance tests. All are deterministic in their parameters.

// Reducts of every closure system on 1..bound points pass the axioms, are
// principal, and are regular.
SuiteResult suite_axioms(int bound = 3);
// The derived laws hold on the random corpus.
SuiteResult suite_derived(int count = 200, int max_size = 5,
                          std::uint64_t seed = 0xA11CE5);
// The pair-quotient audit passes on the corpus plus the named instances.
SuiteResult suite_corre2(int count = 200, int max_size = 5,
                         std::uint64_t seed = 0xA11CE5);
// Extensions of small corpus structures are principal regular and the unit
// is an embedding; lifts exist, commute, and are unique.
SuiteResult suite_universal(int max_size = 3);
// Random closure semilattices embed into closure spaces with all four
// verification clauses.
SuiteResult suite_emb(int count = 100, int max_size = 6,
                      std::uint64_t seed = 0x5EED);
// Small corpus structures (plus the witness) represent faithfully inside a
// closure space.
SuiteResult suite_corm(int max_size = 3, int count = 200,
                       std::uint64_t seed = 0xA11CE5);

}  // namespace mspec
