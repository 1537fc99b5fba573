#include "mspec/represent.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "mspec/error.hpp"

namespace mspec {

namespace {

constexpr std::size_t kMaxClosedFamily = 1u << 16;

std::string subset_name(const std::vector<std::string>& points, Mask m) {
  std::string s = "{";
  bool first = true;
  for_each_bit(m, [&](int i) {
    if (!first) s += ",";
    first = false;
    s += points[i];
  });
  return s + "}";
}

}  // namespace

SpecStructure reduct_of_closure_semilattice(const ClosureSemilattice& s) {
  const int n = s.size();
  SpecRelation rel(n);
  const Mask full = (Mask{1} << n) - 1;
  std::vector<int> kjoin(full + 1, -1);
  for (Mask m = 1; m <= full; ++m) {
    int low = lowest_bit(m);
    Mask rest = m & (m - 1);
    kjoin[m] = rest ? s.lattice.join(kjoin[rest], s.K(low)) : s.K(low);
    for_each_bit(s.lattice.down_set(kjoin[m]),
                 [&](int a) { rel.add(a, m); });
  }
  return SpecStructure{s.lattice, std::move(rel)};
}

SpecStructure reduct_of_closure_space(const ClosureSpace& sp,
                                      int max_elements) {
  const int np = sp.size();
  if (np > kMaxPointsHard || (np > 0 && (1 << np) > max_elements) ||
      (1 << np) > kMaxRelationCarrier)
    throw InputError(ErrorKind::Cap,
                     "powerset carrier 2^" + std::to_string(np) +
                         " exceeds the element cap");
  const int n = 1 << np;  // carrier: all subsets of the point set

  FiniteJoinSemilattice lat;
  for (Mask m = 0; m < static_cast<Mask>(n); ++m)
    lat.elements.push_back(subset_name(sp.points, m));
  lat.table.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) lat.table[i * n + j] = i | j;

  std::vector<Mask> kel(n);
  for (int i = 0; i < n; ++i) kel[i] = space_closure(sp, static_cast<Mask>(i));

  SpecRelation rel(n);
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Mask> cover(full + 1, 0);
  for (Mask m = 1; m <= full; ++m) {
    int low = lowest_bit(m);
    Mask rest = m & (m - 1);
    cover[m] = (rest ? cover[rest] : 0) | kel[low];
    for (int a = 0; a < n; ++a)
      if (subset_of(static_cast<Mask>(a), cover[m])) rel.add(a, m);
  }
  return SpecStructure{std::move(lat), std::move(rel)};
}

SpaceEmbedding embed_closure_semilattice(const ClosureSemilattice& s,
                                         int max_points) {
  const int n = s.size();
  if (n > kMaxPointsHard || n > max_points)
    throw InputError(ErrorKind::Cap,
                     "embedding ground set of " + std::to_string(n) +
                         " exceeds the point cap of " +
                         std::to_string(std::min(max_points, kMaxPointsHard)));

  SpaceEmbedding emb;
  emb.source_names = s.lattice.elements;
  emb.map.resize(n);
  for (int a = 0; a < n; ++a) {
    Mask m = 0;
    for (int b = 0; b < n; ++b)
      if (!s.lattice.leq(a, b)) m |= bit(b);
    emb.map[a] = m;
  }

  // Closed sets: images of closure-fixed elements, closed under
  // intersection, plus the whole ground set.
  std::set<Mask> family;
  family.insert((Mask{1} << n) - 1);
  for (int z = 0; z < n; ++z)
    if (s.K(z) == z) family.insert(emb.map[z]);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(family.begin(), family.end());
    for (Mask a : cur)
      for (Mask b : cur)
        if (family.insert(a & b).second) grew = true;
    if (family.size() > kMaxClosedFamily)
      throw InputError(ErrorKind::Cap, "closed family blew up");
  }
  emb.space.points = s.lattice.elements;
  emb.space.closed.assign(family.begin(), family.end());

  emb.verified = true;
  for (int a = 0; a < n && emb.verified; ++a)
    for (int b = a + 1; b < n; ++b)
      if (emb.map[a] == emb.map[b]) {
        emb.verified = false;
        emb.failure = "not injective at " + s.lattice.elements[a] + "," +
                      s.lattice.elements[b];
      }
  for (int a = 0; a < n && emb.verified; ++a)
    for (int b = 0; b < n; ++b) {
      if (emb.map[s.lattice.join(a, b)] != (emb.map[a] | emb.map[b])) {
        emb.verified = false;
        emb.failure = "join not mapped to union at " +
                      s.lattice.elements[a] + "," + s.lattice.elements[b];
        break;
      }
      if (subset_of(emb.map[a], emb.map[b]) && !s.lattice.leq(a, b)) {
        emb.verified = false;
        emb.failure = "order not reflected at " + s.lattice.elements[a] +
                      "," + s.lattice.elements[b];
        break;
      }
    }
  for (int a = 0; a < n && emb.verified; ++a)
    if (emb.map[s.K(a)] != space_closure(emb.space, emb.map[a])) {
      emb.verified = false;
      emb.failure =
          "closure not preserved at " + s.lattice.elements[a];
    }
  return emb;
}

Representation represent(const SpecStructure& m, int max_carrier,
                         int max_points) {
  FreeExtension ext = build_free_extension(m, max_carrier);
  Representation rep;
  rep.ground_size = ext.class_count();
  rep.embedding = embed_closure_semilattice(ext.as_closure_semilattice(),
                                            max_points);
  rep.unit = ext.unit_table();

  const int n = m.size();
  const Mask full = (Mask{1} << n) - 1;
  rep.parent_names = m.lattice.elements;
  rep.iota.resize(n);
  std::vector<Mask> kiota(n);
  for (int a = 0; a < n; ++a) {
    rep.iota[a] = rep.embedding.map[ext.unit(a)];
    kiota[a] = space_closure(rep.embedding.space, rep.iota[a]);
  }
  rep.verified = rep.embedding.verified;
  for (int a = 0; a < n && rep.verified; ++a)
    for (Mask s = 1; s <= full; ++s) {
      Mask cover = 0;
      for_each_bit(s, [&](int b) { cover |= kiota[b]; });
      if (m.rel.contains(a, s) != subset_of(rep.iota[a], cover)) {
        rep.verified = false;
        rep.witness = {a, s};
        break;
      }
    }
  return rep;
}

namespace {

std::vector<Mask> closure_table(const ClosureSpace& sp, const char* what) {
  if (sp.size() > kMaxTopoPoints)
    throw InputError(ErrorKind::Cap, std::string(what) + " is capped at " +
                                         std::to_string(kMaxTopoPoints) +
                                         " points");
  std::vector<Mask> k(std::size_t{1} << sp.size());
  for (Mask x = 0; x < k.size(); ++x) k[x] = space_closure(sp, x);
  return k;
}

}  // namespace

bool topological_check(const ClosureSpace& sp) {
  const auto k = closure_table(sp, "topological check");
  if (k[0] != 0) return false;
  for (Mask x = 0; x < k.size(); ++x)
    for (Mask y = 0; y < k.size(); ++y)
      if (k[x | y] != (k[x] | k[y])) return false;
  return true;
}

std::optional<TopoGap> topo_gap_witness(const ClosureSpace& sp) {
  const auto k = closure_table(sp, "gap search");
  for (Mask a = 0; a < k.size(); ++a)
    for (Mask b = 0; b < k.size(); ++b)
      for (Mask c = 0; c < k.size(); ++c)
        if (subset_of(a, k[b | c]) && !subset_of(a, k[b] | k[c]))
          return TopoGap{a, b, c};
  return std::nullopt;
}

}  // namespace mspec
