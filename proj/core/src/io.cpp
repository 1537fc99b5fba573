#include "mspec/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "mspec/error.hpp"

namespace mspec {

using json = nlohmann::ordered_json;

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == '+' || c == '"' || c == '\\' || c == ' ' || c == '\t' ||
        c == '\n' || c == '\r')
      return false;
  return true;
}

void require_keys(const json& j, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional = {}) {
  if (!j.is_object())
    throw InputError(ErrorKind::Schema, "structure file must be an object");
  for (const auto& k : required)
    if (!j.contains(k))
      throw InputError(ErrorKind::Schema, "missing key: " + k);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    bool known = false;
    for (const auto& r : required) known = known || r == k;
    for (const auto& o : optional) known = known || o == k;
    if (!known)
      throw InputError(ErrorKind::Schema, "unknown key: " + k);
  }
}

std::vector<std::string> parse_names(const json& j, const char* what,
                                     int cap) {
  if (!j.is_array())
    throw InputError(ErrorKind::Schema, std::string(what) + " must be a list");
  std::vector<std::string> names;
  for (const auto& e : j) {
    if (!e.is_string())
      throw InputError(ErrorKind::Schema,
                       std::string(what) + " entries must be strings");
    std::string s = e.get<std::string>();
    if (!valid_name(s))
      throw InputError(ErrorKind::Schema, "invalid name: \"" + s + "\"");
    for (const auto& prev : names)
      if (prev == s)
        throw InputError(ErrorKind::Schema, "duplicate name: " + s);
    names.push_back(std::move(s));
  }
  if (static_cast<int>(names.size()) > cap)
    throw InputError(ErrorKind::Cap,
                     std::string(what) + " count " +
                         std::to_string(names.size()) +
                         " exceeds the cap of " + std::to_string(cap));
  return names;
}

int resolve(const std::vector<std::string>& names, const json& j,
            const char* where) {
  if (!j.is_string())
    throw InputError(ErrorKind::Schema,
                     std::string(where) + ": expected an element name");
  const std::string s = j.get<std::string>();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == s) return static_cast<int>(i);
  throw InputError(ErrorKind::UnknownElement,
                   std::string(where) + ": unknown element \"" + s + "\"");
}

FiniteJoinSemilattice parse_lattice(const json& j, const Caps& caps) {
  FiniteJoinSemilattice lat;
  lat.elements = parse_names(j.at("elements"), "elements", caps.max_elements);
  const int n = lat.size();
  const json& rows = j.at("join");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw InputError(ErrorKind::Schema, "join must have one row per element");
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw InputError(ErrorKind::Schema,
                       "join rows must have one entry per element");
    for (const auto& cell : row)
      lat.table.push_back(resolve(lat.elements, cell, "join"));
  }
  if (auto v = validate_join_table(lat))
    throw ValidatorError(render_table_violation(*v, lat));
  return lat;
}

SpecStructure parse_mspec(const json& j, const Caps& caps) {
  require_keys(j, {"kind", "elements", "join", "spec"});
  FiniteJoinSemilattice lat = parse_lattice(j, caps);
  const json& spec = j.at("spec");
  if (!spec.is_array())
    throw InputError(ErrorKind::Schema, "spec must be a list");
  SpecRelation rel(lat.size());
  for (const auto& entry : spec) {
    if (!entry.is_array() || entry.size() != 2)
      throw InputError(ErrorKind::Schema,
                       "spec entries must be [lhs, [rhs...]] pairs");
    int lhs = resolve(lat.elements, entry[0], "spec lhs");
    const json& rhs = entry[1];
    if (!rhs.is_array() || rhs.empty())
      throw InputError(ErrorKind::Schema, "spec rhs must be a nonempty list");
    Mask m = 0;
    for (const auto& e : rhs) m |= bit(resolve(lat.elements, e, "spec rhs"));
    rel.add(lhs, m);
  }
  return SpecStructure{std::move(lat), std::move(rel)};
}

ClosureSemilattice parse_csl(const json& j, const Caps& caps) {
  require_keys(j, {"kind", "elements", "join", "K"}, {"classmap"});
  FiniteJoinSemilattice lat = parse_lattice(j, caps);
  const json& kj = j.at("K");
  if (!kj.is_object())
    throw InputError(ErrorKind::Schema, "K must be an object");
  std::vector<int> closure(lat.size(), -1);
  for (auto it = kj.begin(); it != kj.end(); ++it) {
    int a = resolve(lat.elements, json(it.key()), "K");
    closure[a] = resolve(lat.elements, it.value(), "K");
  }
  for (std::size_t a = 0; a < closure.size(); ++a)
    if (closure[a] == -1)
      throw InputError(ErrorKind::Schema,
                       "K must be total; missing " + lat.elements[a]);
  ClosureSemilattice s{std::move(lat), std::move(closure)};
  if (auto v = validate_closure_semilattice(s)) {
    std::string msg = v->law + " violated at " + s.lattice.elements[v->a];
    if (v->b >= 0) msg += "," + s.lattice.elements[v->b];
    throw ValidatorError(msg);
  }
  return s;
}

ClosureSpace parse_cspace(const json& j, const Caps& caps) {
  require_keys(j, {"kind", "points", "closed"});
  ClosureSpace sp;
  sp.points = parse_names(j.at("points"), "points",
                          std::min(caps.max_points, kMaxPointsHard));
  const json& cl = j.at("closed");
  if (!cl.is_array())
    throw InputError(ErrorKind::Schema, "closed must be a list of sets");
  for (const auto& set : cl) {
    if (!set.is_array())
      throw InputError(ErrorKind::Schema, "closed sets must be lists");
    Mask m = 0;
    for (const auto& e : set) m |= bit(resolve(sp.points, e, "closed"));
    sp.closed.push_back(m);
  }
  std::sort(sp.closed.begin(), sp.closed.end());
  sp.closed.erase(std::unique(sp.closed.begin(), sp.closed.end()),
                  sp.closed.end());
  if (std::find(sp.closed.begin(), sp.closed.end(), sp.full()) ==
      sp.closed.end())
    throw InputError(ErrorKind::Schema,
                     "closed must contain the full point set");
  if (auto v = validate_closure_space(sp))
    throw ValidatorError("intersection of " + set_to_string(v->c, sp.points) +
                         " and " + set_to_string(v->d, sp.points) +
                         " is not closed");
  return sp;
}

SpecStructure parse_hom_end(const json& j, const Caps& caps,
                            const std::string& base_dir) {
  json inner;
  if (j.is_string()) {
    std::string path = j.get<std::string>();
    if (!path.empty() && path[0] != '/') path = base_dir + "/" + path;
    std::ifstream in(path);
    if (!in)
      throw InputError(ErrorKind::Schema, "cannot read file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      inner = json::parse(buf.str());
    } catch (const json::parse_error& e) {
      throw InputError(ErrorKind::Schema,
                       path + ": invalid JSON: " + e.what());
    }
  } else {
    inner = j;
  }
  if (!inner.is_object() || inner.value("kind", "") != "mspec")
    throw InputError(ErrorKind::Schema, "hom endpoints must be mspec");
  return parse_mspec(inner, caps);
}

ParsedHom parse_hom(const json& j, const Caps& caps,
                    const std::string& base_dir) {
  require_keys(j, {"kind", "from", "to", "map"});
  ParsedHom h{parse_hom_end(j.at("from"), caps, base_dir),
              parse_hom_end(j.at("to"), caps, base_dir),
              Homomorphism{}};
  const json& mp = j.at("map");
  if (!mp.is_object())
    throw InputError(ErrorKind::Schema, "map must be an object");
  h.hom.map.assign(h.source.size(), -1);
  for (auto it = mp.begin(); it != mp.end(); ++it) {
    int a = resolve(h.source.lattice.elements, json(it.key()), "map");
    h.hom.map[a] = resolve(h.target.lattice.elements, it.value(), "map");
  }
  for (std::size_t a = 0; a < h.hom.map.size(); ++a)
    if (h.hom.map[a] == -1)
      throw InputError(ErrorKind::Schema,
                       "map must be total; missing " +
                           h.source.lattice.elements[a]);
  return h;
}

json lattice_json(const FiniteJoinSemilattice& lat) {
  json j = json::object();
  j["elements"] = lat.elements;
  json rows = json::array();
  for (int i = 0; i < lat.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < lat.size(); ++k)
      row.push_back(lat.elements[lat.join(i, k)]);
    rows.push_back(std::move(row));
  }
  j["join"] = std::move(rows);
  return j;
}

json set_json(Mask m, const std::vector<std::string>& names) {
  json arr = json::array();
  for_each_bit(m, [&](int i) { arr.push_back(names[i]); });
  return arr;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json witness_json(const LawWitness& w, const std::vector<std::string>& names) {
  json j = json::object();
  if (w.a >= 0) j["a"] = names[w.a];
  if (w.a1 >= 0) j["a1"] = names[w.a1];
  if (w.b >= 0) j["b"] = names[w.b];
  if (w.c >= 0) j["c"] = names[w.c];
  if (w.x >= 0) j["x"] = names[w.x];
  if (w.B != 0) j["B"] = set_json(w.B, names);
  if (w.C != 0) j["C"] = set_json(w.C, names);
  return j;
}

json csl_json(const ClosureSemilattice& s) {
  json j = json::object();
  j["kind"] = "csl";
  json lat = lattice_json(s.lattice);
  j["elements"] = std::move(lat["elements"]);
  j["join"] = std::move(lat["join"]);
  json k = json::object();
  for (int a = 0; a < s.size(); ++a)
    k[s.lattice.elements[a]] = s.lattice.elements[s.K(a)];
  j["K"] = std::move(k);
  return j;
}

json cspace_json(const ClosureSpace& sp) {
  json j = json::object();
  j["kind"] = "cspace";
  j["points"] = sp.points;
  json fam = json::array();
  for (Mask c : sp.closed) fam.push_back(set_json(c, sp.points));
  j["closed"] = std::move(fam);
  return j;
}

json embedding_json(const SpaceEmbedding& e) {
  json j = json::object();
  j["space"] = cspace_json(e.space);
  json mp = json::object();
  for (std::size_t a = 0; a < e.map.size(); ++a)
    mp[e.source_names[a]] = set_json(e.map[a], e.space.points);
  j["map"] = std::move(mp);
  j["verified"] = e.verified;
  if (!e.verified) j["failure"] = e.failure;
  return j;
}

}  // namespace

std::string set_to_string(Mask m, const std::vector<std::string>& names) {
  std::string s = "{";
  bool first = true;
  for_each_bit(m, [&](int i) {
    if (!first) s += ",";
    first = false;
    s += names[i];
  });
  return s + "}";
}

ParsedStructure parse_structure(const std::string& text, const Caps& caps,
                                const std::string& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(ErrorKind::Schema, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw InputError(ErrorKind::Schema, "missing kind tag");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "mspec") return parse_mspec(j, caps);
  if (kind == "csl") return parse_csl(j, caps);
  if (kind == "cspace") return parse_cspace(j, caps);
  if (kind == "hom") return parse_hom(j, caps, base_dir);
  throw InputError(ErrorKind::Schema, "unknown kind: " + kind);
}

std::string serialize_structure(const SpecStructure& s) {
  json j = json::object();
  j["kind"] = "mspec";
  json lat = lattice_json(s.lattice);
  j["elements"] = std::move(lat["elements"]);
  j["join"] = std::move(lat["join"]);
  json spec = json::array();
  s.rel.for_each([&](int a, Mask m) {
    json entry = json::array();
    entry.push_back(s.lattice.elements[a]);
    entry.push_back(set_json(m, s.lattice.elements));
    spec.push_back(std::move(entry));
  });
  j["spec"] = std::move(spec);
  return dump(j);
}

std::string serialize_structure(const ClosureSemilattice& s) {
  return dump(csl_json(s));
}

std::string serialize_structure(const ClosureSpace& s) {
  return dump(cspace_json(s));
}

std::string serialize_structure(const ParsedHom& h) {
  json j = json::object();
  j["kind"] = "hom";
  j["from"] = json::parse(serialize_structure(h.source));
  j["to"] = json::parse(serialize_structure(h.target));
  json mp = json::object();
  for (std::size_t a = 0; a < h.hom.map.size(); ++a)
    mp[h.source.lattice.elements[a]] =
        h.target.lattice.elements[h.hom.map[a]];
  j["map"] = std::move(mp);
  return dump(j);
}

std::string serialize_extension(const FreeExtension& e) {
  json j = json::parse(serialize_structure(e.as_closure_semilattice()));
  json cm = json::object();
  json classes = json::array();
  const auto& parent_names = e.parent().lattice.elements;
  for (const auto& c : e.classes()) {
    json cj = json::object();
    cj["label"] = c.label;
    json rep = json::array();
    rep.push_back(parent_names[c.rep.base]);
    rep.push_back(set_json(c.rep.bag, parent_names));
    cj["rep"] = std::move(rep);
    classes.push_back(std::move(cj));
  }
  cm["classes"] = std::move(classes);
  json unit = json::object();
  for (int a = 0; a < e.parent().size(); ++a)
    unit[parent_names[a]] = e.classes()[e.unit(a)].label;
  cm["unit"] = std::move(unit);
  j["classmap"] = std::move(cm);
  return dump(j);
}

std::string serialize_embedding(const SpaceEmbedding& e) {
  return dump(embedding_json(e));
}

std::string serialize_representation(const Representation& r) {
  json j = json::object();
  j["ground_size"] = r.ground_size;
  j["space"] = cspace_json(r.embedding.space);
  json mp = json::object();
  for (std::size_t a = 0; a < r.iota.size(); ++a)
    mp[r.parent_names[a]] = set_json(r.iota[a], r.embedding.space.points);
  j["map"] = std::move(mp);
  j["verified"] = r.verified;
  if (r.witness) {
    json w = json::object();
    w["lhs"] = r.parent_names[r.witness->first];
    w["rhs"] = set_json(r.witness->second, r.parent_names);
    j["witness"] = std::move(w);
  }
  return dump(j);
}

std::string render_table_violation(const TableViolation& v,
                                   const FiniteJoinSemilattice& lat) {
  std::string msg = v.law + " violated at (" + lat.elements[v.a];
  if (v.b >= 0) msg += "," + lat.elements[v.b];
  if (v.c >= 0) msg += "," + lat.elements[v.c];
  return msg + ")";
}

std::string render_law_report_json(const LawReport& r,
                                   const FiniteJoinSemilattice& lat) {
  json j = json::object();
  j["ok"] = r.ok;
  json laws = json::array();
  for (const auto& v : r.verdicts) {
    json lj = json::object();
    lj["law"] = v.law;
    lj["ok"] = v.ok;
    if (v.by_representation) lj["by"] = "representation";
    if (!v.ok) lj["witness"] = witness_json(v.witness, lat.elements);
    laws.push_back(std::move(lj));
  }
  j["laws"] = std::move(laws);
  return dump(j);
}

std::string render_law_report_text(const LawReport& r,
                                   const FiniteJoinSemilattice& lat) {
  std::string out;
  for (const auto& v : r.verdicts) {
    out += v.law;
    if (v.ok)
      out += v.by_representation ? ": ok (by representation)" : ": ok";
    else
      out += ": violated at " +
             witness_json(v.witness, lat.elements).dump();
    out += "\n";
  }
  return out;
}

std::string render_hom_report_json(const HomReport& r, const ParsedHom& h) {
  const auto& names = h.source.lattice.elements;
  json j = json::object();
  j["ok"] = r.ok;
  j["embedding"] = r.embedding;
  j["injective"] = r.injective;
  if (r.join_violation) {
    j["join_violation"] = json::array(
        {names[r.join_violation->first], names[r.join_violation->second]});
  }
  if (r.rel_violation) {
    json w = json::object();
    w["lhs"] = names[r.rel_violation->first];
    w["rhs"] = set_json(r.rel_violation->second, names);
    j["relation_violation"] = std::move(w);
  }
  if (r.order_reflect_violation)
    j["order_reflection_violation"] =
        json::array({names[r.order_reflect_violation->first],
                     names[r.order_reflect_violation->second]});
  if (r.rel_reflect_violation) {
    json w = json::object();
    w["lhs"] = names[r.rel_reflect_violation->first];
    w["rhs"] = set_json(r.rel_reflect_violation->second, names);
    j["relation_reflection_violation"] = std::move(w);
  }
  return dump(j);
}

std::string render_regularity_json(const RegularityReport& r,
                                   const FiniteJoinSemilattice& lat) {
  json j = json::object();
  j["regular"] = r.regular;
  if (r.witness) {
    json w = json::object();
    w["lhs"] = lat.elements[r.witness->first];
    w["rhs"] = set_json(r.witness->second, lat.elements);
    j["witness"] = std::move(w);
  }
  if (r.reverse_defect) {
    json w = json::object();
    w["lhs"] = lat.elements[r.reverse_defect->first];
    w["rhs"] = set_json(r.reverse_defect->second, lat.elements);
    j["reverse_defect"] = std::move(w);
  }
  json k = json::object();
  for (int a = 0; a < lat.size(); ++a)
    k[lat.elements[a]] = lat.elements[r.table.closure[a]];
  j["closure"] = std::move(k);
  return dump(j);
}

}  // namespace mspec
