#include "mspec/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "mspec/axioms.hpp"
#include "mspec/error.hpp"

namespace mspec {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t n) { return next() % n; }

bool SplitMix64::next_bernoulli(double p) {
  std::uint64_t v = next();
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return static_cast<double>(v) < p * 18446744073709551616.0;  // 2^64
}

std::vector<ClosureSpace> enum_closure_systems(int n) {
  if (n < 0 || n > kMaxEnumPoints)
    throw InputError(ErrorKind::Cap,
                     "closure-system enumeration is capped at " +
                         std::to_string(kMaxEnumPoints) + " points");
  const Mask full = (Mask{1} << n) - 1;
  std::vector<std::string> points;
  for (int i = 0; i < n; ++i) points.push_back(std::to_string(i + 1));

  std::vector<ClosureSpace> out;
  // Candidate members are all subsets except the mandatory ground set.
  const int slots = static_cast<int>(full);  // masks 0 .. full-1
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << slots); ++fam) {
    std::vector<Mask> closed;
    for (int k = 0; k < slots; ++k)
      if ((fam >> k) & 1) closed.push_back(static_cast<Mask>(k));
    closed.push_back(full);
    bool ok = true;
    for (std::size_t i = 0; i < closed.size() && ok; ++i)
      for (std::size_t j = i + 1; j < closed.size(); ++j) {
        Mask inter = closed[i] & closed[j];
        if (!std::binary_search(closed.begin(), closed.end(), inter)) {
          ok = false;
          break;
        }
      }
    if (ok) out.push_back(ClosureSpace{points, std::move(closed)});
  }
  return out;
}

namespace {

// Canonical join table: the lexicographically least relabeling.
std::vector<int> canonical_table(const std::vector<int>& table, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best, cur(n * n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        cur[perm[i] * n + perm[j]] = perm[table[i * n + j]];
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

}  // namespace

std::vector<FiniteJoinSemilattice> enum_join_semilattices(int n) {
  if (n < 1 || n > kMaxEnumCarrier)
    throw InputError(ErrorKind::Cap,
                     "semilattice enumeration is capped at carrier " +
                         std::to_string(kMaxEnumCarrier));
  // Each unordered pair is incomparable, <, or >; filter transitive orders
  // where every pair has a least upper bound.
  std::vector<std::pair<int, int>> prs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) prs.emplace_back(i, j);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < prs.size(); ++i) total *= 3;

  std::set<std::vector<int>> canon;
  std::vector<char> le(n * n);
  std::vector<int> table(n * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::fill(le.begin(), le.end(), 0);
    for (int i = 0; i < n; ++i) le[i * n + i] = 1;
    std::uint64_t c = code;
    for (auto [i, j] : prs) {
      int v = static_cast<int>(c % 3);
      c /= 3;
      if (v == 1) le[i * n + j] = 1;
      if (v == 2) le[j * n + i] = 1;
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (!le[i * n + j]) continue;
        for (int k = 0; k < n; ++k)
          if (le[j * n + k] && !le[i * n + k]) {
            ok = false;
            break;
          }
      }
    if (!ok) continue;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        int least = -1;
        for (int m = 0; m < n; ++m) {
          if (!le[i * n + m] || !le[j * n + m]) continue;
          bool is_least = true;
          for (int u = 0; u < n; ++u)
            if (le[i * n + u] && le[j * n + u] && !le[m * n + u])
              is_least = false;
          if (is_least) {
            least = m;
            break;
          }
        }
        if (least == -1) {
          ok = false;
          break;
        }
        table[i * n + j] = least;
      }
    if (!ok) continue;
    canon.insert(canonical_table(table, n));
  }

  std::vector<FiniteJoinSemilattice> out;
  for (const auto& t : canon)
    out.push_back(FiniteJoinSemilattice{default_names(n), t});
  return out;
}

FiniteJoinSemilattice random_join_semilattice(const GenConfig& cfg) {
  if (cfg.size < 1)
    throw InputError(ErrorKind::Usage, "size bound must be positive");
  SplitMix64 rng(cfg.seed);
  const int ground = std::min(cfg.size, 16);
  const Mask space = Mask{1} << ground;

  int seeds = cfg.size;
  for (int attempt = 0;; ++attempt) {
    std::set<Mask> family;
    for (int i = 0; i < seeds; ++i)
      family.insert(static_cast<Mask>(rng.next_below(space)));
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Mask> cur(family.begin(), family.end());
      for (Mask a : cur)
        for (Mask b : cur)
          if (family.insert(a | b).second) grew = true;
    }
    if (static_cast<int>(family.size()) <= cfg.size) {
      std::vector<Mask> masks(family.begin(), family.end());
      const int n = static_cast<int>(masks.size());
      FiniteJoinSemilattice lat;
      lat.elements = default_names(n);
      lat.table.resize(static_cast<std::size_t>(n) * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Mask u = masks[i] | masks[j];
          lat.table[i * n + j] = static_cast<int>(
              std::lower_bound(masks.begin(), masks.end(), u) -
              masks.begin());
        }
      return lat;
    }
    if (attempt > 0 && attempt % 8 == 0 && seeds > 1) --seeds;
  }
}

SpecStructure random_spec_structure(const GenConfig& cfg) {
  if (cfg.density < 0.0 || cfg.density > 1.0)
    throw InputError(ErrorKind::Usage, "density must be in [0,1]");
  FiniteJoinSemilattice lat = random_join_semilattice(cfg);
  const int n = lat.size();
  const Mask full = (Mask{1} << n) - 1;
  SplitMix64 rng(cfg.seed ^ 0x9E3779B97F4A7C15ull);
  SpecRelation seed(n);
  for (int a = 0; a < n; ++a)
    for (Mask m = 1; m <= full; ++m)
      if (rng.next_bernoulli(cfg.density)) seed.add(a, m);
  return SpecStructure{lat, saturate(lat, seed)};
}

std::vector<Homomorphism> enum_homomorphisms(const SpecStructure& m,
                                             const SpecStructure& t) {
  const int nm = m.size();
  const int nt = t.size();
  double total = 1;
  for (int i = 0; i < nm; ++i) total *= nt;
  if (total > static_cast<double>(kMaxHomMaps))
    throw InputError(ErrorKind::Cap, "homomorphism enumeration cap exceeded");

  std::vector<Homomorphism> out;
  Homomorphism h;
  h.map.assign(nm, 0);
  while (true) {
    if (check_homomorphism(m, t, h).ok) out.push_back(h);
    int k = nm - 1;
    for (; k >= 0; --k) {
      if (++h.map[k] < nt) break;
      h.map[k] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

std::optional<TopoGapSearchResult> search_topo_gap(int bound) {
  if (bound < 1 || bound > kMaxEnumPoints)
    throw InputError(ErrorKind::Cap, "topo-gap search bound out of range");
  for (int n = 1; n <= bound; ++n)
    for (const ClosureSpace& sp : enum_closure_systems(n))
      if (auto gap = topo_gap_witness(sp))
        return TopoGapSearchResult{sp, *gap};
  return std::nullopt;
}

std::optional<NonRegularSearchResult> search_non_regular(int bound) {
  if (bound < 1 || bound > kMaxEnumCarrier)
    throw InputError(ErrorKind::Cap, "non-regular search bound out of range");
  for (int n = 1; n <= bound; ++n) {
    const Mask full = (Mask{1} << n) - 1;
    for (const FiniteJoinSemilattice& lat : enum_join_semilattices(n)) {
      std::optional<NonRegularSearchResult> hit;
      auto try_seed = [&](const SpecRelation& seed) {
        SpecStructure s{lat, saturate(lat, seed)};
        RegularityReport rep = check_regular(s);
        if (!rep.regular && rep.witness)
          hit = NonRegularSearchResult{std::move(s), rep.witness->first,
                                       rep.witness->second};
        return hit.has_value();
      };
      if (try_seed(SpecRelation(n))) return hit;
      for (int a = 0; a < n; ++a)
        for (Mask m = 1; m <= full; ++m) {
          SpecRelation seed(n);
          seed.add(a, m);
          if (try_seed(seed)) return hit;
        }
    }
  }
  return std::nullopt;
}

}  // namespace mspec
