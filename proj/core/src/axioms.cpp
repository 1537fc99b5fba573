#include "mspec/axioms.hpp"

#include <deque>
#include <string>
#include <vector>

#include "mspec/error.hpp"

namespace mspec {

const LawVerdict* LawReport::find(const std::string& law) const {
  for (const auto& v : verdicts)
    if (v.law == law) return &v;
  return nullptr;
}

namespace {

// Joins of every nonempty subset, filled by peeling the lowest bit.
std::vector<int> subset_joins(const FiniteJoinSemilattice& lat) {
  const Mask full = (Mask{1} << lat.size()) - 1;
  std::vector<int> js(full + 1, -1);
  for (Mask m = 1; m <= full; ++m) {
    int low = lowest_bit(m);
    Mask rest = m & (m - 1);
    js[m] = rest ? lat.join(js[rest], low) : low;
  }
  return js;
}

}  // namespace

LawReport check_axioms(const SpecStructure& s) {
  const auto& lat = s.lattice;
  const auto& rel = s.rel;
  const int n = s.size();
  const Mask full = (Mask{1} << n) - 1;
  LawReport rep;
  auto verdict = [&](const char* law) -> LawVerdict& {
    rep.verdicts.push_back(LawVerdict{law, true, false, {}});
    return rep.verdicts.back();
  };

  {
    auto& v = verdict("M1");
    for (int a = 0; a < n; ++a)
      if (!rel.contains(a, bit(a))) {
        v.ok = false;
        v.witness.a = a;
        break;
      }
  }
  {
    auto& v = verdict("M2");
    for (int a = 0; a < n && v.ok; ++a)
      for (Mask m = 1; m <= full && v.ok; ++m) {
        if (!rel.contains(a, m)) continue;
        for (int b = 0; b < n && v.ok; ++b) {
          if (!has_bit(m, b)) continue;
          for (int c = 0; c < n; ++c) {
            if (!rel.contains(b, bit(c))) continue;
            if (!rel.contains(a, (m & ~bit(b)) | bit(c))) {
              v.ok = false;
              v.witness = {a, -1, b, c, -1, m, 0};
              break;
            }
          }
        }
      }
  }
  {
    auto& v = verdict("M3");
    for (int a = 0; a < n && v.ok; ++a)
      for (int b = 0; b < n && v.ok; ++b) {
        if (!lat.leq(a, b)) continue;
        for (Mask m = 1; m <= full; ++m)
          if (rel.contains(b, m) && !rel.contains(a, m)) {
            v.ok = false;
            v.witness = {a, -1, b, -1, -1, 0, m};
            break;
          }
      }
  }
  verdict("M4").by_representation = true;
  verdict("M5").by_representation = true;
  {
    auto& v = verdict("M6");
    for (int a = 0; a < n && v.ok; ++a)
      for (Mask m = 1; m <= full && v.ok; ++m) {
        if (!rel.contains(a, m)) continue;
        for (int x = 0; x < n; ++x)
          if (!rel.contains(a, m | bit(x))) {
            v.ok = false;
            v.witness = {a, -1, -1, -1, x, m, 0};
            break;
          }
      }
  }
  {
    auto& v = verdict("M7");
    for (int a = 0; a < n && v.ok; ++a)
      for (int a1 = 0; a1 < n && v.ok; ++a1)
        for (Mask m = 1; m <= full; ++m)
          if (rel.contains(a, m) && rel.contains(a1, m) &&
              !rel.contains(lat.join(a, a1), m)) {
            v.ok = false;
            v.witness = {a, a1, -1, -1, -1, m, 0};
            break;
          }
  }

  rep.ok = true;
  for (const auto& v : rep.verdicts) rep.ok = rep.ok && v.ok;
  return rep;
}

LawReport check_derived_laws(const SpecStructure& s) {
  const auto& lat = s.lattice;
  const auto& rel = s.rel;
  const int n = s.size();
  if (n > 12)
    throw InputError(ErrorKind::Cap,
                     "derived-law sweep is capped at carrier 12");
  const Mask full = (Mask{1} << n) - 1;
  const auto joins = subset_joins(lat);
  LawReport rep;
  auto verdict = [&](const char* law) -> LawVerdict& {
    rep.verdicts.push_back(LawVerdict{law, true, false, {}});
    return rep.verdicts.back();
  };

  {
    auto& v = verdict("M1+");
    for (int a = 0; a < n && v.ok; ++a)
      for (int b = 0; b < n; ++b)
        if (lat.leq(a, b) && !rel.contains(a, bit(b))) {
          v.ok = false;
          v.witness = {a, -1, b, -1, -1, 0, 0};
          break;
        }
  }
  {
    auto& v = verdict("M2-");
    for (int a = 0; a < n && v.ok; ++a)
      for (int b = 0; b < n && v.ok; ++b) {
        if (!rel.contains(a, bit(b))) continue;
        for (int c = 0; c < n; ++c)
          if (rel.contains(b, bit(c)) && !rel.contains(a, bit(c))) {
            v.ok = false;
            v.witness = {a, -1, b, c, -1, 0, 0};
            break;
          }
      }
  }
  {
    auto& v = verdict("M2*");
    for (int a = 0; a < n && v.ok; ++a)
      for (int b = 0; b < n && v.ok; ++b) {
        if (!rel.contains(a, bit(b))) continue;
        for (int c = 0; c < n; ++c)
          if (lat.leq(b, c) && !rel.contains(a, bit(c))) {
            v.ok = false;
            v.witness = {a, -1, b, c, -1, 0, 0};
            break;
          }
      }
  }
  {
    // Pointwise replacement: every rhs set reachable by replacing each
    // member b with some c related above it must stay related. The
    // reachable-set sweep is a subset DP, so no function enumeration.
    auto& v = verdict("M2+");
    std::vector<Mask> repl(n, 0);  // candidates per element
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (rel.contains(b, bit(c))) repl[b] |= bit(c);
    std::vector<char> cur(full + 1), nxt(full + 1);
    for (int a = 0; a < n && v.ok; ++a)
      for (Mask m = 1; m <= full && v.ok; ++m) {
        if (!rel.contains(a, m)) continue;
        std::fill(cur.begin(), cur.end(), 0);
        cur[0] = 1;
        Mask rest = m;
        while (rest) {
          int b = lowest_bit(rest);
          rest &= rest - 1;
          std::fill(nxt.begin(), nxt.end(), 0);
          for (Mask p = 0; p <= full; ++p) {
            if (!cur[p]) continue;
            for_each_bit(repl[b], [&](int c) { nxt[p | bit(c)] = 1; });
          }
          cur.swap(nxt);
        }
        for (Mask t = 1; t <= full; ++t)
          if (cur[t] && !rel.contains(a, t)) {
            v.ok = false;
            v.witness = {a, -1, -1, -1, -1, m, t};
            break;
          }
      }
  }
  {
    auto& v = verdict("pupb");
    for (Mask m = 1; m <= full; ++m)
      if (!rel.contains(joins[m], m)) {
        v.ok = false;
        v.witness = {joins[m], -1, -1, -1, -1, m, 0};
        break;
      }
  }
  {
    auto& v = verdict("M8");
    for (int a = 0; a < n && v.ok; ++a)
      for (Mask m = 1; m <= full; ++m)
        if (lat.leq(a, joins[m]) && !rel.contains(a, m)) {
          v.ok = false;
          v.witness = {a, -1, -1, -1, -1, m, 0};
          break;
        }
  }
  {
    auto& v = verdict("M9");
    for (int a = 0; a < n && v.ok; ++a)
      for (Mask m = 1; m <= full; ++m)
        if (rel.contains(a, m) && !rel.contains(a, bit(joins[m]))) {
          v.ok = false;
          v.witness = {a, -1, -1, -1, -1, m, 0};
          break;
        }
  }
  {
    auto& v = verdict("M6+");
    for (int a = 0; a < n && v.ok; ++a)
      for (Mask m = 1; m <= full && v.ok; ++m) {
        if (!rel.contains(a, m)) continue;
        // Supersets of m, ascending.
        for (Mask sup = m;; sup = (sup + 1) | m) {
          if (!rel.contains(a, sup)) {
            v.ok = false;
            v.witness = {a, -1, -1, -1, -1, m, sup};
            break;
          }
          if (sup == full) break;
        }
      }
  }

  rep.ok = true;
  for (const auto& v : rep.verdicts) rep.ok = rep.ok && v.ok;
  return rep;
}

SpecRelation saturate(const FiniteJoinSemilattice& lat,
                      const SpecRelation& seed) {
  const int n = lat.size();
  if (seed.carrier() != n)
    throw InputError(ErrorKind::Usage, "seed carrier mismatch");
  const Mask full = (Mask{1} << n) - 1;

  SpecRelation rel(n);
  std::deque<std::pair<int, Mask>> work;
  auto add = [&](int a, Mask m) {
    if (!rel.contains(a, m)) {
      rel.add(a, m);
      work.emplace_back(a, m);
    }
  };

  for (int a = 0; a < n; ++a) add(a, bit(a));
  seed.for_each([&](int a, Mask m) { add(a, m); });

  while (!work.empty()) {
    auto [a, m] = work.front();
    work.pop_front();
    // weakening: grow the rhs
    for (int x = 0; x < n; ++x) add(a, m | bit(x));
    // order transport: everything below a
    for (int a2 = 0; a2 < n; ++a2)
      if (lat.leq(a2, a)) add(a2, m);
    // join of lhs over the same rhs
    for_each_bit(rel.lhs_set(m), [&](int a1) { add(lat.join(a, a1), m); });
    // replacement, forward: some member of m has a singleton fact
    for_each_bit(m, [&](int b) {
      for (int c = 0; c < n; ++c)
        if (rel.contains(b, bit(c))) add(a, (m & ~bit(b)) | bit(c));
    });
    // replacement, backward: this fact is a singleton b <= {c}
    if (popcount(m) == 1) {
      const int b = a;
      const int c = lowest_bit(m);
      for (Mask m2 = 1; m2 <= full; ++m2) {
        if (!has_bit(m2, b)) continue;
        for_each_bit(rel.lhs_set(m2),
                     [&](int x) { add(x, (m2 & ~bit(b)) | bit(c)); });
      }
    }
  }
  return rel;
}

ClosureTable principal_closure_table(const SpecStructure& s) {
  const int n = s.size();
  ClosureTable t;
  t.closure.assign(n, -1);
  t.principal = true;
  for (int x = 0; x < n; ++x) {
    Mask below = s.rel.lhs_set(bit(x));
    if (below == 0) {
      t.principal = false;
      t.offending = x;
      return t;
    }
    t.closure[x] = s.lattice.join_set(below);
    if (!s.rel.contains(t.closure[x], bit(x))) {
      t.principal = false;
      t.offending = x;
      return t;
    }
  }
  ClosureSemilattice cs{s.lattice, t.closure};
  t.law_violation = validate_closure_semilattice(cs);
  if (t.law_violation) t.principal = false;
  return t;
}

RegularityReport check_regular(const SpecStructure& s) {
  RegularityReport rep;
  rep.table = principal_closure_table(s);
  if (!rep.table.principal)
    throw InputError(ErrorKind::Usage,
                     "regularity requires a principal structure");
  const int n = s.size();
  const Mask full = (Mask{1} << n) - 1;
  // join of closures per rhs set
  std::vector<int> kjoin(full + 1, -1);
  for (Mask m = 1; m <= full; ++m) {
    int low = lowest_bit(m);
    Mask rest = m & (m - 1);
    kjoin[m] = rest ? s.lattice.join(kjoin[rest], rep.table.closure[low])
                    : rep.table.closure[low];
  }
  for (int a = 0; a < n; ++a)
    for (Mask m = 1; m <= full; ++m) {
      bool in_rel = s.rel.contains(a, m);
      bool bounded = s.lattice.leq(a, kjoin[m]);
      if (in_rel && !bounded && !rep.witness) rep.witness = {a, m};
      if (!in_rel && bounded && !rep.reverse_defect) rep.reverse_defect = {a, m};
    }
  rep.regular = !rep.witness && !rep.reverse_defect;
  return rep;
}

}  // namespace mspec
