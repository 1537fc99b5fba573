#include "mspec/suites.hpp"

#include <string>

#include "mspec/axioms.hpp"
#include "mspec/error.hpp"
#include "mspec/extension.hpp"
#include "mspec/hom.hpp"
#include "mspec/represent.hpp"

namespace mspec {

namespace {

FiniteJoinSemilattice chain(int n) {
  FiniteJoinSemilattice lat;
  for (int i = 0; i < n; ++i) lat.elements.push_back(std::to_string(i));
  lat.table.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) lat.table[i * n + j] = std::max(i, j);
  return lat;
}

SpecRelation total_relation(int n) {
  SpecRelation rel(n);
  const Mask full = (Mask{1} << n) - 1;
  for (int a = 0; a < n; ++a)
    for (Mask m = 1; m <= full; ++m) rel.add(a, m);
  return rel;
}

}  // namespace

SpecStructure make_one_element() {
  FiniteJoinSemilattice lat{{"e"}, {0}};
  SpecRelation rel(1);
  rel.add(0, 1);
  return SpecStructure{std::move(lat), std::move(rel)};
}

SpecStructure make_two_chain_total() {
  return SpecStructure{chain(2), total_relation(2)};
}

namespace {

FiniteJoinSemilattice witness_lattice() {
  // a,b,c,s,u with b v c = s and a v b = a v c = a v s = u.
  FiniteJoinSemilattice lat;
  lat.elements = {"a", "b", "c", "s", "u"};
  const int A = 0, B = 1, C = 2, S = 3, U = 4;
  auto idx = [](int i, int j) { return i * 5 + j; };
  lat.table.assign(25, U);
  for (int i = 0; i < 5; ++i) lat.table[idx(i, i)] = i;
  auto set = [&](int i, int j, int v) {
    lat.table[idx(i, j)] = v;
    lat.table[idx(j, i)] = v;
  };
  set(B, C, S);
  set(B, S, S);
  set(C, S, S);
  set(A, B, U);
  set(A, C, U);
  set(A, S, U);
  for (int i = 0; i < 5; ++i) set(i, U, U);
  return lat;
}

}  // namespace

SpecStructure make_five_element_witness_seed() {
  FiniteJoinSemilattice lat = witness_lattice();
  SpecRelation seed(5);
  seed.add(0, bit(1) | bit(2));  // a related to {b,c}
  return SpecStructure{std::move(lat), std::move(seed)};
}

SpecStructure make_five_element_witness() {
  SpecStructure seed = make_five_element_witness_seed();
  SpecRelation rel = saturate(seed.lattice, seed.rel);
  return SpecStructure{seed.lattice, std::move(rel)};
}

std::vector<SpecStructure> random_corpus(int count, int max_size,
                                         const std::vector<double>& densities,
                                         std::uint64_t seed) {
  std::vector<SpecStructure> out;
  out.reserve(count);
  int i = 0;
  while (static_cast<int>(out.size()) < count) {
    for (double d : densities) {
      if (static_cast<int>(out.size()) >= count) break;
      GenConfig cfg;
      cfg.size = (i % max_size) + 1;
      cfg.seed = seed + 0x1000003ull * static_cast<std::uint64_t>(i);
      cfg.density = d;
      out.push_back(random_spec_structure(cfg));
      ++i;
    }
  }
  return out;
}

SuiteResult suite_axioms(int bound) {
  SuiteResult res{"axioms", 0, {}};
  for (int n = 1; n <= bound; ++n) {
    const auto systems = enum_closure_systems(n);
    for (std::size_t i = 0; i < systems.size(); ++i) {
      ++res.cases;
      const std::string tag =
          "system " + std::to_string(n) + "/" + std::to_string(i);
      SpecStructure red = reduct_of_closure_space(systems[i], 16);
      if (!check_axioms(red).ok) {
        res.failures.push_back(tag + ": axioms fail");
        continue;
      }
      ClosureTable t = principal_closure_table(red);
      if (!t.principal) {
        res.failures.push_back(tag + ": not principal");
        continue;
      }
      RegularityReport reg = check_regular(red);
      if (!reg.regular) res.failures.push_back(tag + ": not regular");
    }
  }
  return res;
}

SuiteResult suite_derived(int count, int max_size, std::uint64_t seed) {
  SuiteResult res{"derived", 0, {}};
  const auto corpus = random_corpus(count, max_size, {0.0, 0.1, 0.5, 1.0},
                                    seed);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    ++res.cases;
    if (!check_axioms(corpus[i]).ok) {
      res.failures.push_back("structure " + std::to_string(i) +
                             ": axioms fail after saturation");
      continue;
    }
    LawReport rep = check_derived_laws(corpus[i]);
    if (!rep.ok) {
      for (const auto& v : rep.verdicts)
        if (!v.ok)
          res.failures.push_back("structure " + std::to_string(i) + ": " +
                                 v.law + " fails");
    }
  }
  return res;
}

SuiteResult suite_corre2(int count, int max_size, std::uint64_t seed) {
  SuiteResult res{"corre2", 0, {}};
  std::vector<SpecStructure> corpus =
      random_corpus(count, max_size, {0.0, 0.1, 0.5, 1.0}, seed);
  corpus.push_back(make_one_element());
  corpus.push_back(make_two_chain_total());
  corpus.push_back(make_five_element_witness());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    ++res.cases;
    QuotientAuditReport rep = audit_pair_quotient(corpus[i]);
    if (!rep.ok)
      res.failures.push_back("structure " + std::to_string(i) + ": " +
                             rep.check + " fails");
  }
  return res;
}

SuiteResult suite_universal(int max_size) {
  SuiteResult res{"universal", 0, {}};
  // Small structures: each enumerated lattice with its saturated seed
  // relations (empty seed, all single-pair seeds, total), deduplicated.
  std::vector<SpecStructure> structures;
  for (int n = 1; n <= max_size; ++n) {
    for (const FiniteJoinSemilattice& lat : enum_join_semilattices(n)) {
      std::vector<SpecRelation> rels;
      auto push = [&](const SpecRelation& r) {
        for (const auto& prev : rels)
          if (prev == r) return;
        rels.push_back(r);
      };
      push(saturate(lat, SpecRelation(n)));
      const Mask full = (Mask{1} << n) - 1;
      for (int a = 0; a < n; ++a)
        for (Mask m = 1; m <= full; ++m) {
          SpecRelation seed(n);
          seed.add(a, m);
          push(saturate(lat, seed));
        }
      for (const auto& r : rels)
        structures.push_back(SpecStructure{lat, r});
    }
  }
  std::vector<const SpecStructure*> targets;
  for (const auto& s : structures)
    if (check_regular(s).regular) targets.push_back(&s);

  for (std::size_t mi = 0; mi < structures.size(); ++mi) {
    const SpecStructure& m = structures[mi];
    FreeExtension ext = build_free_extension(m);
    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
      const SpecStructure& t = *targets[ti];
      const auto homs = enum_homomorphisms(m, t);
      for (std::size_t hi = 0; hi < homs.size(); ++hi) {
        ++res.cases;
        const std::string tag = "M" + std::to_string(mi) + " T" +
                                std::to_string(ti) + " eta" +
                                std::to_string(hi);
        LiftResult lift = lift_homomorphism(ext, t, homs[hi]);
        if (!lift.ok) {
          res.failures.push_back(tag + ": lift not a commuting K-hom");
          continue;
        }
        if (!lift.unique.has_value())
          res.failures.push_back(tag + ": uniqueness sweep skipped");
        else if (!*lift.unique)
          res.failures.push_back(tag + ": second commuting K-hom found");
      }
    }
  }
  return res;
}

SuiteResult suite_emb(int count, int max_size, std::uint64_t seed) {
  SuiteResult res{"emb", 0, {}};
  SplitMix64 rng(seed);
  int made = 0;
  while (made < count) {
    GenConfig cfg;
    cfg.size = (made % max_size) + 1;
    cfg.seed = rng.next();
    FiniteJoinSemilattice lat = random_join_semilattice(cfg);
    const int n = lat.size();
    // Random closure: a random set of closed elements containing the top,
    // kept only if every element has a least closed element above it.
    std::vector<int> closure(n, -1);
    std::vector<char> closed(n, 0);
    closed[lat.top()] = 1;
    for (int i = 0; i < n; ++i)
      if (rng.next_bernoulli(0.5)) closed[i] = 1;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      int best = -1;
      for (int c = 0; c < n; ++c) {
        if (!closed[c] || !lat.leq(x, c)) continue;
        if (best == -1 || lat.leq(c, best)) best = c;
      }
      for (int c = 0; c < n; ++c)
        if (closed[c] && lat.leq(x, c) && !lat.leq(best, c)) ok = false;
      closure[x] = best;
    }
    if (!ok) continue;
    ++made;
    ++res.cases;
    ClosureSemilattice s{std::move(lat), std::move(closure)};
    if (validate_closure_semilattice(s)) {
      res.failures.push_back("case " + std::to_string(made) +
                             ": generator produced an invalid closure");
      continue;
    }
    SpaceEmbedding emb = embed_closure_semilattice(s);
    if (!emb.verified)
      res.failures.push_back("case " + std::to_string(made) + ": " +
                             emb.failure);
  }
  return res;
}

SuiteResult suite_corm(int max_size, int count, std::uint64_t seed) {
  SuiteResult res{"corm", 0, {}};
  std::vector<SpecStructure> corpus =
      random_corpus(count, 5, {0.0, 0.1, 0.5, 1.0}, seed);
  std::vector<SpecStructure> small;
  for (auto& s : corpus)
    if (s.size() <= max_size) small.push_back(std::move(s));
  small.push_back(make_five_element_witness());
  for (std::size_t i = 0; i < small.size(); ++i) {
    ++res.cases;
    Representation rep = represent(small[i], 8, kMaxPointsHard);
    if (!rep.verified)
      res.failures.push_back("structure " + std::to_string(i) +
                             ": representation not faithful");
  }
  return res;
}

}  // namespace mspec
