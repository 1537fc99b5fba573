#include "mspec/extension.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "mspec/error.hpp"

namespace mspec {

namespace {

constexpr std::size_t kMaxLiftCandidates = 2'000'000;

int pair_id(int n, PairElement p) { return (p.base << n) | static_cast<int>(p.bag); }

PairElement pair_from_id(int n, int id) {
  return PairElement{id >> n, static_cast<Mask>(id) & ((Mask{1} << n) - 1)};
}

// Dense preorder over the whole pair space, rows as word-packed bitsets.
struct PairPreorder {
  int n = 0;
  int count = 0;  // n * 2^n
  int words = 0;
  std::vector<std::uint64_t> rows;

  bool at(int p, int q) const {
    return (rows[static_cast<std::size_t>(p) * words + (q >> 6)] >>
            (q & 63)) & 1;
  }
};

PairPreorder compute_preorder(const SpecStructure& m) {
  const int n = m.size();
  PairPreorder pre;
  pre.n = n;
  pre.count = n << n;
  pre.words = (pre.count + 63) / 64;
  pre.rows.assign(static_cast<std::size_t>(pre.count) * pre.words, 0);

  // Per target pair q = (c, D), the admissible bases are the union of the
  // down-sets of c v d over the d related to D (just the down-set of c when
  // D is empty), and the admissible bag members are the elements related to
  // some singleton of D.
  for (int q = 0; q < pre.count; ++q) {
    PairElement tq = pair_from_id(n, q);
    Mask bases = 0;
    if (tq.bag == 0) {
      bases = m.lattice.down_set(tq.base);
    } else {
      for_each_bit(m.rel.lhs_set(tq.bag), [&](int d) {
        bases |= m.lattice.down_set(m.lattice.join(tq.base, d));
      });
    }
    Mask members = 0;
    for_each_bit(tq.bag, [&](int d) { members |= m.rel.lhs_set(bit(d)); });

    for (int p = 0; p < pre.count; ++p) {
      PairElement tp = pair_from_id(n, p);
      if (has_bit(bases, tp.base) && subset_of(tp.bag, members))
        pre.rows[static_cast<std::size_t>(p) * pre.words + (q >> 6)] |=
            std::uint64_t{1} << (q & 63);
    }
  }
  return pre;
}

// Tarjan over the preorder digraph, iterative.
std::vector<int> scc_components(const PairPreorder& pre) {
  const int P = pre.count;
  std::vector<int> index(P, -1), low(P, 0), comp(P, -1);
  std::vector<char> onstack(P, 0);
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;

  struct Frame {
    int v;
    int j;  // next successor candidate
  };
  std::vector<Frame> frames;

  for (int root = 0; root < P; ++root) {
    if (index[root] != -1) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    onstack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.j < P) {
        int w = f.j++;
        if (!pre.at(f.v, w)) continue;
        if (index[w] == -1) {
          frames.push_back({w, 0});
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          onstack[w] = 1;
        } else if (onstack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        if (low[v] == index[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            onstack[w] = 0;
            comp[w] = next_comp;
            if (w == v) break;
          }
          ++next_comp;
        }
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return comp;
}

std::string class_label(const FiniteJoinSemilattice& lat, PairElement rep) {
  std::string s = lat.elements[rep.base];
  if (rep.bag) {
    s += "+K{";
    bool first = true;
    for_each_bit(rep.bag, [&](int b) {
      if (!first) s += ",";
      first = false;
      s += lat.elements[b];
    });
    s += "}";
  }
  return s;
}

}  // namespace

bool pair_leq(const SpecStructure& m, PairElement p, PairElement q) {
  const int n = m.size();
  bool a2 = true;
  for_each_bit(p.bag, [&](int b) {
    bool found = false;
    for_each_bit(q.bag, [&](int d) {
      if (m.rel.contains(b, bit(d))) found = true;
    });
    if (!found) a2 = false;
  });
  if (!a2) return false;
  if (q.bag == 0) return m.lattice.leq(p.base, q.base);
  for (int d = 0; d < n; ++d)
    if (m.rel.contains(d, q.bag) &&
        m.lattice.leq(p.base, m.lattice.join(q.base, d)))
      return true;
  return false;
}

int FreeExtension::class_of(PairElement p) const {
  return pair_class_[pair_id(parent_.size(), p)];
}

bool FreeExtension::rel_member(int lhs, std::span<const int> rhs) const {
  if (rhs.empty()) return false;
  int acc = K(rhs[0]);
  for (std::size_t i = 1; i < rhs.size(); ++i)
    acc = join(acc, K(rhs[i]));
  return leq(lhs, acc);
}

FiniteJoinSemilattice FreeExtension::as_lattice() const {
  FiniteJoinSemilattice lat;
  for (const auto& c : classes_) lat.elements.push_back(c.label);
  lat.table = join_;
  return lat;
}

ClosureSemilattice FreeExtension::as_closure_semilattice() const {
  return ClosureSemilattice{as_lattice(), closure_};
}

SpecStructure FreeExtension::as_spec_structure() const {
  const int c = class_count();
  if (c > kMaxClassesForRelation)
    throw InputError(ErrorKind::Cap,
                     "materializing the class relation is capped at " +
                         std::to_string(kMaxClassesForRelation) +
                         " classes (got " + std::to_string(c) + ")");
  FiniteJoinSemilattice lat = as_lattice();
  SpecRelation rel(c);
  const Mask full = (Mask{1} << c) - 1;
  // join of class closures per rhs set, then everything below is related
  std::vector<int> kjoin(full + 1, -1);
  std::vector<Mask> down(c, 0);
  for (int j = 0; j < c; ++j)
    for (int i = 0; i < c; ++i)
      if (leq(i, j)) down[j] |= bit(i);
  for (Mask mset = 1; mset <= full; ++mset) {
    int low = lowest_bit(mset);
    Mask rest = mset & (mset - 1);
    kjoin[mset] = rest ? join(kjoin[rest], K(low)) : K(low);
    for_each_bit(down[kjoin[mset]], [&](int x) { rel.add(x, mset); });
  }
  return SpecStructure{std::move(lat), std::move(rel)};
}

FreeExtension build_free_extension(const SpecStructure& m, int max_carrier) {
  const int n = m.size();
  const int cap = std::min(max_carrier, kMaxExtensionCarrier);
  if (n > cap)
    throw InputError(ErrorKind::Cap,
                     "extension construction is capped at carrier " +
                         std::to_string(cap) + " (got " + std::to_string(n) +
                         ")");

  PairPreorder pre = compute_preorder(m);
  std::vector<int> comp = scc_components(pre);

  // Group members per component in pair-id order; the representative is the
  // least member, and classes are sorted by representative.
  int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<int>> members(ncomp);
  for (int p = 0; p < pre.count; ++p) members[comp[p]].push_back(p);
  std::vector<int> order(ncomp);
  for (int i = 0; i < ncomp; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return members[x].front() < members[y].front();
  });

  if (ncomp > kMaxClasses)
    throw InputError(ErrorKind::Cap, "extension has too many classes");

  FreeExtension e(m);
  e.pair_class_.assign(pre.count, -1);
  for (int ci = 0; ci < ncomp; ++ci) {
    const auto& mem = members[order[ci]];
    FreeExtension::ClassInfo info;
    info.rep = pair_from_id(n, mem.front());
    for (int p : mem) {
      info.members.push_back(pair_from_id(n, p));
      e.pair_class_[p] = ci;
    }
    info.label = class_label(m.lattice, info.rep);
    e.classes_.push_back(std::move(info));
  }

  const int c = ncomp;
  e.join_.assign(static_cast<std::size_t>(c) * c, -1);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) {
      PairElement a = e.classes_[i].rep, b = e.classes_[j].rep;
      PairElement jn{m.lattice.join(a.base, b.base), a.bag | b.bag};
      e.join_[static_cast<std::size_t>(i) * c + j] =
          e.pair_class_[pair_id(n, jn)];
    }
  e.closure_.assign(c, -1);
  for (int i = 0; i < c; ++i) {
    PairElement r = e.classes_[i].rep;
    int xbar = r.base;
    for_each_bit(r.bag, [&](int b) { xbar = m.lattice.join(xbar, b); });
    e.closure_[i] = e.pair_class_[pair_id(n, PairElement{r.base, bit(xbar)})];
  }
  e.unit_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    e.unit_[a] = e.pair_class_[pair_id(n, PairElement{a, 0})];
  return e;
}

HomReport unit_embedding(const FreeExtension& e) {
  const SpecStructure& m = e.parent();
  const int n = m.size();
  const Mask full = (Mask{1} << n) - 1;
  HomReport rep;

  rep.injective = true;
  for (int a = 0; a < n && rep.injective; ++a)
    for (int b = a + 1; b < n; ++b)
      if (e.unit(a) == e.unit(b)) {
        rep.injective = false;
        break;
      }
  for (int a = 0; a < n && !rep.join_violation; ++a)
    for (int b = 0; b < n; ++b)
      if (e.unit(m.lattice.join(a, b)) != e.join(e.unit(a), e.unit(b))) {
        rep.join_violation = {a, b};
        break;
      }
  for (int a = 0; a < n && !rep.order_reflect_violation; ++a)
    for (int b = 0; b < n; ++b)
      if (e.leq(e.unit(a), e.unit(b)) && !m.lattice.leq(a, b)) {
        rep.order_reflect_violation = {a, b};
        break;
      }
  std::vector<int> rhs;
  for (int a = 0; a < n; ++a)
    for (Mask mset = 1; mset <= full; ++mset) {
      rhs.clear();
      for_each_bit(mset, [&](int b) { rhs.push_back(e.unit(b)); });
      bool in_parent = m.rel.contains(a, mset);
      bool in_ext = e.rel_member(e.unit(a), rhs);
      if (in_parent && !in_ext && !rep.rel_violation) rep.rel_violation = {a, mset};
      if (in_ext && !in_parent && !rep.rel_reflect_violation)
        rep.rel_reflect_violation = {a, mset};
    }
  rep.ok = !rep.join_violation && !rep.rel_violation;
  rep.embedding = rep.ok && rep.injective && !rep.order_reflect_violation &&
                  !rep.rel_reflect_violation;
  return rep;
}

namespace {

int eval_lift(const FreeExtension& e, const SpecStructure& t,
              const std::vector<int>& kt, const Homomorphism& eta,
              PairElement p) {
  int v = eta(p.base);
  for_each_bit(p.bag, [&](int b) { v = t.lattice.join(v, kt[eta(b)]); });
  return v;
}

}  // namespace

LiftResult lift_homomorphism(const FreeExtension& ext,
                             const SpecStructure& target,
                             const Homomorphism& eta) {
  if (!check_axioms(target).ok)
    throw InputError(ErrorKind::Usage, "lift target fails the axioms");
  RegularityReport reg = check_regular(target);
  if (!reg.regular)
    throw InputError(ErrorKind::Usage, "lift target is not regular");
  if (!check_homomorphism(ext.parent(), target, eta).ok)
    throw InputError(ErrorKind::Usage, "eta is not a homomorphism");
  const std::vector<int>& kt = reg.table.closure;
  const int c = ext.class_count();

  LiftResult res;
  res.map.assign(c, -1);
  res.well_defined = true;
  for (int i = 0; i < c; ++i) {
    const auto& cls = ext.classes()[i];
    res.map[i] = eval_lift(ext, target, kt, eta, cls.rep);
    for (const PairElement& mem : cls.members)
      if (eval_lift(ext, target, kt, eta, mem) != res.map[i]) {
        res.well_defined = false;
        if (!res.witness) res.witness = {i, mem};
      }
  }
  res.join_preserving = true;
  for (int i = 0; i < c && res.join_preserving; ++i)
    for (int j = 0; j < c; ++j)
      if (res.map[ext.join(i, j)] !=
          target.lattice.join(res.map[i], res.map[j])) {
        res.join_preserving = false;
        break;
      }
  res.closure_preserving = true;
  for (int i = 0; i < c; ++i)
    if (res.map[ext.K(i)] != kt[res.map[i]]) {
      res.closure_preserving = false;
      break;
    }
  res.commutes = true;
  for (int a = 0; a < ext.parent().size(); ++a)
    if (res.map[ext.unit(a)] != eta(a)) {
      res.commutes = false;
      break;
    }
  res.ok = res.well_defined && res.join_preserving &&
           res.closure_preserving && res.commutes;

  if (!res.ok) return res;

  // Uniqueness: every candidate agreeing with eta on the unit image and
  // preserving join and closure must equal the lift. The free positions are
  // the classes outside the unit image.
  std::vector<int> fixed(c, -1);
  bool consistent = true;
  for (int a = 0; a < ext.parent().size(); ++a) {
    int cls = ext.unit(a);
    if (fixed[cls] != -1 && fixed[cls] != eta(a)) consistent = false;
    fixed[cls] = eta(a);
  }
  std::vector<int> free_pos;
  for (int i = 0; i < c; ++i)
    if (fixed[i] == -1) free_pos.push_back(i);
  const int tn = target.size();
  double total = 1;
  for (std::size_t i = 0; i < free_pos.size(); ++i) total *= tn;
  if (!consistent || total > static_cast<double>(kMaxLiftCandidates))
    return res;  // unique stays unset: only existence was checked

  std::vector<int> cand(c);
  std::vector<int> odo(free_pos.size(), 0);
  bool second = false;
  while (!second) {
    for (int i = 0; i < c; ++i) cand[i] = fixed[i];
    for (std::size_t i = 0; i < free_pos.size(); ++i)
      cand[free_pos[i]] = odo[i];
    bool valid = true;
    for (int i = 0; i < c && valid; ++i) {
      if (cand[ext.K(i)] != kt[cand[i]]) valid = false;
      for (int j = 0; j <= i && valid; ++j)
        if (cand[ext.join(i, j)] != target.lattice.join(cand[i], cand[j]))
          valid = false;
    }
    if (valid && cand != res.map) second = true;
    // advance odometer
    std::size_t k = 0;
    for (; k < odo.size(); ++k) {
      if (++odo[k] < tn) break;
      odo[k] = 0;
    }
    if (k == odo.size()) break;
  }
  res.unique = !second;
  return res;
}

LiftResult lift_homomorphism(const SpecStructure& m,
                             const SpecStructure& target,
                             const Homomorphism& eta) {
  return lift_homomorphism(build_free_extension(m), target, eta);
}

LiftResult lift_between_extensions(const FreeExtension& ext_m,
                                   const FreeExtension& ext_u,
                                   const Homomorphism& psi) {
  if (!check_homomorphism(ext_m.parent(), ext_u.parent(), psi).ok)
    throw InputError(ErrorKind::Usage, "psi is not a homomorphism");
  SpecStructure target = ext_u.as_spec_structure();
  Homomorphism eta;
  eta.map.resize(ext_m.parent().size());
  for (int a = 0; a < ext_m.parent().size(); ++a)
    eta.map[a] = ext_u.unit(psi(a));
  return lift_homomorphism(ext_m, target, eta);
}

QuotientAuditReport audit_pair_quotient(const SpecStructure& m) {
  const int n = m.size();
  if (n > kMaxAuditCarrier)
    throw InputError(ErrorKind::Cap,
                     "pair-quotient audit is capped at carrier " +
                         std::to_string(kMaxAuditCarrier));
  PairPreorder pre = compute_preorder(m);
  const int P = pre.count;
  QuotientAuditReport rep;
  auto fail = [&](const char* check, int p, int q, int r) {
    rep.ok = false;
    rep.check = check;
    rep.p = pair_from_id(n, p);
    if (q >= 0) rep.q = pair_from_id(n, q);
    if (r >= 0) rep.r = pair_from_id(n, r);
  };

  for (int p = 0; p < P; ++p)
    if (!pre.at(p, p)) {
      fail("reflexivity", p, -1, -1);
      return rep;
    }
  for (int p = 0; p < P; ++p)
    for (int q = 0; q < P; ++q) {
      if (!pre.at(p, q)) continue;
      for (int w = 0; w < pre.words; ++w) {
        std::uint64_t extra =
            pre.rows[static_cast<std::size_t>(q) * pre.words + w] &
            ~pre.rows[static_cast<std::size_t>(p) * pre.words + w];
        if (extra) {
          fail("transitivity", p, q, w * 64 + std::countr_zero(extra));
          return rep;
        }
      }
    }
  // Collapsing to the single joined closure respects the preorder.
  auto collapse = [&](int pid) {
    PairElement p = pair_from_id(n, pid);
    int xbar = p.base;
    for_each_bit(p.bag, [&](int b) { xbar = m.lattice.join(xbar, b); });
    return pair_id(n, PairElement{p.base, bit(xbar)});
  };
  for (int p = 0; p < P; ++p)
    for (int q = 0; q < P; ++q)
      if (pre.at(p, q) && !pre.at(collapse(p), collapse(q))) {
        fail("closure-well-defined", p, q, -1);
        return rep;
      }
  // Componentwise join is compatible with the preorder.
  auto join_pairs = [&](int x, int y) {
    PairElement a = pair_from_id(n, x), b = pair_from_id(n, y);
    return pair_id(n, PairElement{m.lattice.join(a.base, b.base),
                                  a.bag | b.bag});
  };
  for (int p = 0; p < P; ++p)
    for (int q = 0; q < P; ++q) {
      if (!pre.at(p, q)) continue;
      for (int r = 0; r < P; ++r)
        if (!pre.at(join_pairs(p, r), join_pairs(q, r))) {
          fail("join-congruence", p, q, r);
          return rep;
        }
    }
  // The class order induced by the quotient join agrees with the
  // representative preorder.
  FreeExtension e = build_free_extension(m, kMaxAuditCarrier);
  for (int i = 0; i < e.class_count(); ++i)
    for (int j = 0; j < e.class_count(); ++j) {
      int pi = pair_id(n, e.classes()[i].rep);
      int pj = pair_id(n, e.classes()[j].rep);
      if (e.leq(i, j) != pre.at(pi, pj)) {
        fail("class-order", pi, pj, -1);
        return rep;
      }
    }
  return rep;
}

}  // namespace mspec
