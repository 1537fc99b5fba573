#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mspec/axioms.hpp"
#include "mspec/error.hpp"
#include "mspec/extension.hpp"
#include "mspec/generate.hpp"
#include "mspec/io.hpp"
#include "mspec/represent.hpp"
#include "mspec/suites.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  try {
    int parsed = std::stoi(v);
    if (parsed < 1) throw std::invalid_argument("nonpositive");
    return parsed;
  } catch (...) {
    throw mspec::InputError(mspec::ErrorKind::Usage,
                            std::string(name) + " must be a positive integer");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw mspec::InputError(mspec::ErrorKind::Usage,
                            "cannot read file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string base_dir_of(const std::string& path) {
  auto pos = path.find_last_of('/');
  return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

struct Options {
  std::string file;
  bool as_json = false;
  int max_elements = 0;  // 0: use env/default
  int max_points = 0;
  int count = 0;
  int size = 0;
  std::uint64_t seed_flag = 0;
  bool seed_set = false;
  std::string property;
  std::string suite;
  bool between = false;
};

mspec::Caps caps_of(const Options& o, int default_elements) {
  mspec::Caps caps;
  caps.max_elements = o.max_elements > 0
                          ? o.max_elements
                          : env_int("MSPEC_MAX_ELEMENTS", default_elements);
  caps.max_points =
      o.max_points > 0 ? o.max_points : env_int("MSPEC_MAX_POINTS", 16);
  return caps;
}

mspec::ParsedStructure parse_file(const std::string& path,
                                  const mspec::Caps& caps) {
  return mspec::parse_structure(read_file(path), caps, base_dir_of(path));
}

int run_check(const Options& o) {
  mspec::Caps caps = caps_of(o, 12);
  mspec::ParsedStructure st = parse_file(o.file, caps);
  if (auto* m = std::get_if<mspec::SpecStructure>(&st)) {
    mspec::LawReport rep = mspec::check_axioms(*m);
    std::cout << (o.as_json
                      ? mspec::render_law_report_json(rep, m->lattice)
                      : mspec::render_law_report_text(rep, m->lattice));
    return rep.ok ? 0 : kExitViolation;
  }
  if (auto* h = std::get_if<mspec::ParsedHom>(&st)) {
    mspec::HomReport rep = mspec::check_homomorphism(h->source, h->target,
                                                     h->hom);
    if (o.as_json) {
      std::cout << mspec::render_hom_report_json(rep, *h);
    } else {
      std::cout << "homomorphism: " << (rep.ok ? "ok" : "violated") << "\n"
                << "embedding: " << (rep.embedding ? "yes" : "no") << "\n";
    }
    return rep.ok ? 0 : kExitViolation;
  }
  // csl / cspace: their laws were verified during parsing.
  const char* kind =
      std::holds_alternative<mspec::ClosureSemilattice>(st) ? "csl" : "cspace";
  if (o.as_json)
    std::cout << json{{"ok", true}, {"kind", kind}}.dump(2) << "\n";
  else
    std::cout << kind << ": ok\n";
  return 0;
}

mspec::SpecStructure require_mspec(mspec::ParsedStructure&& st,
                                   const char* verb) {
  if (auto* m = std::get_if<mspec::SpecStructure>(&st)) return std::move(*m);
  throw mspec::InputError(mspec::ErrorKind::Usage,
                          std::string(verb) + " expects an mspec file");
}

int gate_axioms(const mspec::SpecStructure& m, const Options& o) {
  mspec::LawReport rep = mspec::check_axioms(m);
  if (rep.ok) return 0;
  std::cout << (o.as_json ? mspec::render_law_report_json(rep, m.lattice)
                          : mspec::render_law_report_text(rep, m.lattice));
  return kExitViolation;
}

int run_saturate(const Options& o) {
  mspec::Caps caps = caps_of(o, 12);
  mspec::SpecStructure m = require_mspec(parse_file(o.file, caps), "saturate");
  mspec::SpecRelation sat = mspec::saturate(m.lattice, m.rel);
  std::cout << mspec::serialize_structure(
      mspec::SpecStructure{m.lattice, std::move(sat)});
  return 0;
}

int run_extend(const Options& o) {
  mspec::Caps caps = caps_of(o, 8);
  mspec::SpecStructure m = require_mspec(parse_file(o.file, caps), "extend");
  if (int rc = gate_axioms(m, o)) return rc;
  mspec::FreeExtension e = mspec::build_free_extension(m, caps.max_elements);
  std::cout << mspec::serialize_extension(e);
  return 0;
}

int run_embed(const Options& o) {
  mspec::Caps caps = caps_of(o, 12);
  auto st = parse_file(o.file, caps);
  auto* s = std::get_if<mspec::ClosureSemilattice>(&st);
  if (!s)
    throw mspec::InputError(mspec::ErrorKind::Usage,
                            "embed expects a csl file");
  mspec::SpaceEmbedding emb =
      mspec::embed_closure_semilattice(*s, caps.max_points);
  std::cout << mspec::serialize_embedding(emb);
  return emb.verified ? 0 : kExitViolation;
}

int run_reduct(const Options& o) {
  mspec::Caps caps = caps_of(o, 12);
  auto st = parse_file(o.file, caps);
  if (auto* s = std::get_if<mspec::ClosureSemilattice>(&st)) {
    std::cout << mspec::serialize_structure(
        mspec::reduct_of_closure_semilattice(*s));
    return 0;
  }
  if (auto* sp = std::get_if<mspec::ClosureSpace>(&st)) {
    std::cout << mspec::serialize_structure(
        mspec::reduct_of_closure_space(*sp, caps.max_elements));
    return 0;
  }
  throw mspec::InputError(mspec::ErrorKind::Usage,
                          "reduct expects a csl or cspace file");
}

int run_represent(const Options& o) {
  mspec::Caps caps = caps_of(o, 8);
  mspec::SpecStructure m =
      require_mspec(parse_file(o.file, caps), "represent");
  if (int rc = gate_axioms(m, o)) return rc;
  mspec::Representation rep =
      mspec::represent(m, caps.max_elements, caps.max_points);
  std::cout << mspec::serialize_representation(rep);
  return rep.verified ? 0 : kExitViolation;
}

json lift_json(const mspec::LiftResult& res,
               const std::vector<std::string>& class_labels,
               const std::vector<std::string>& target_names) {
  json j = json::object();
  json mp = json::object();
  for (std::size_t i = 0; i < res.map.size(); ++i)
    mp[class_labels[i]] = target_names[res.map[i]];
  j["map"] = std::move(mp);
  j["well_defined"] = res.well_defined;
  j["k_homomorphism"] = res.join_preserving && res.closure_preserving;
  j["commutes"] = res.commutes;
  if (res.unique.has_value())
    j["unique"] = *res.unique;
  else
    j["unique"] = nullptr;
  return j;
}

int run_lift(const Options& o) {
  mspec::Caps caps = caps_of(o, 8);
  auto st = parse_file(o.file, caps);
  auto* h = std::get_if<mspec::ParsedHom>(&st);
  if (!h)
    throw mspec::InputError(mspec::ErrorKind::Usage, "lift expects a hom file");
  if (int rc = gate_axioms(h->source, o)) return rc;
  mspec::FreeExtension ext =
      mspec::build_free_extension(h->source, caps.max_elements);
  std::vector<std::string> labels;
  for (const auto& c : ext.classes()) labels.push_back(c.label);

  mspec::LiftResult res;
  std::vector<std::string> target_names;
  if (o.between) {
    if (int rc = gate_axioms(h->target, o)) return rc;
    mspec::FreeExtension ext_u =
        mspec::build_free_extension(h->target, caps.max_elements);
    res = mspec::lift_between_extensions(ext, ext_u, h->hom);
    for (const auto& c : ext_u.classes()) target_names.push_back(c.label);
  } else {
    res = mspec::lift_homomorphism(ext, h->target, h->hom);
    target_names = h->target.lattice.elements;
  }
  std::cout << lift_json(res, labels, target_names).dump(2) << "\n";
  return res.ok ? 0 : kExitViolation;
}

int run_search(const Options& o) {
  json out = json::object();
  std::string text;
  if (o.property == "topo-gap") {
    int bound = o.size > 0 ? o.size : 3;
    auto found = mspec::search_topo_gap(bound);
    out["property"] = "topo-gap";
    out["found"] = found.has_value();
    if (found) {
      const auto& pts = found->space.points;
      out["space"] =
          json::parse(mspec::serialize_structure(found->space));
      out["witness"] = json{{"a", json::parse("[]")},
                            {"b", json::parse("[]")},
                            {"c", json::parse("[]")}};
      for (int i : mspec::bits_of(found->gap.a))
        out["witness"]["a"].push_back(pts[i]);
      for (int i : mspec::bits_of(found->gap.b))
        out["witness"]["b"].push_back(pts[i]);
      for (int i : mspec::bits_of(found->gap.c))
        out["witness"]["c"].push_back(pts[i]);
      text = "found: " + std::to_string(found->space.size()) +
             "-point space, witness (" +
             mspec::set_to_string(found->gap.a, pts) + "," +
             mspec::set_to_string(found->gap.b, pts) + "," +
             mspec::set_to_string(found->gap.c, pts) + ")\n";
    } else {
      text = "none\n";
    }
  } else if (o.property == "non-regular") {
    int bound = o.size > 0 ? o.size : 5;
    auto found = mspec::search_non_regular(bound);
    out["property"] = "non-regular";
    out["found"] = found.has_value();
    if (found) {
      const auto& names = found->structure.lattice.elements;
      out["structure"] =
          json::parse(mspec::serialize_structure(found->structure));
      out["witness"] = json{{"lhs", names[found->lhs]},
                            {"rhs", json::array()}};
      for (int i : mspec::bits_of(found->rhs))
        out["witness"]["rhs"].push_back(names[i]);
      text = "found: " + std::to_string(found->structure.size()) +
             "-element structure, witness " + names[found->lhs] +
             " below " + mspec::set_to_string(found->rhs, names) + "\n";
    } else {
      text = "none\n";
    }
  } else {
    throw mspec::InputError(mspec::ErrorKind::Usage,
                            "unknown predicate: " + o.property);
  }
  if (o.as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text;
  return 0;
}

int run_verify(const Options& o) {
  mspec::SuiteResult res;
  const std::uint64_t seed = o.seed_set ? o.seed_flag : 0xA11CE5;
  if (o.suite == "axioms") {
    res = mspec::suite_axioms(o.size > 0 ? o.size : 3);
  } else if (o.suite == "derived") {
    res = mspec::suite_derived(o.count > 0 ? o.count : 200,
                               o.size > 0 ? o.size : 5, seed);
  } else if (o.suite == "corre2") {
    res = mspec::suite_corre2(o.count > 0 ? o.count : 200,
                              o.size > 0 ? o.size : 5, seed);
  } else if (o.suite == "universal") {
    res = mspec::suite_universal(o.size > 0 ? o.size : 3);
  } else if (o.suite == "emb") {
    res = mspec::suite_emb(o.count > 0 ? o.count : 100,
                           o.size > 0 ? o.size : 6,
                           o.seed_set ? o.seed_flag : 0x5EED);
  } else if (o.suite == "corm") {
    res = mspec::suite_corm(o.size > 0 ? o.size : 3,
                            o.count > 0 ? o.count : 200, seed);
  } else {
    throw mspec::InputError(mspec::ErrorKind::Usage,
                            "unknown suite: " + o.suite);
  }
  if (o.as_json) {
    json j = json::object();
    j["suite"] = res.suite;
    j["cases"] = res.cases;
    j["failures"] = res.failures;
    j["ok"] = res.ok();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "suite " << res.suite << ": " << res.cases << " cases, "
              << res.failures.size() << " failures\n";
    for (const auto& f : res.failures) std::cout << "  " << f << "\n";
  }
  return res.ok() ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation with multi-argument specialization "
               "semilattices, closure semilattices and closure spaces"};
  app.require_subcommand(1);
  Options o;

  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--max-elements", o.max_elements,
                    "carrier cap (env MSPEC_MAX_ELEMENTS)");
    cmd->add_option("--max-points", o.max_points,
                    "point cap (env MSPEC_MAX_POINTS)");
    cmd->add_flag("--json", o.as_json, "machine-readable output");
  };
  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", o.file, "structure file")->required();
    add_caps(cmd);
  };

  add_file(app.add_subcommand("check",
                              "validate a structure and decide the axioms"));
  add_file(app.add_subcommand("saturate",
                              "close a seed relation under the axioms"));
  add_file(app.add_subcommand("extend", "build the free principal extension"));
  add_file(app.add_subcommand("embed",
                              "embed a closure semilattice into a closure "
                              "space"));
  add_file(app.add_subcommand("reduct",
                              "specialization reduct of a csl or cspace"));
  add_file(app.add_subcommand(
      "represent", "represent an mspec structure inside a closure space"));
  CLI::App* lift =
      app.add_subcommand("lift", "lift a homomorphism through the extension");
  add_file(lift);
  lift->add_flag("--between", o.between,
                 "lift between the two extensions instead of into the target");

  CLI::App* search = app.add_subcommand("search", "search for a witness");
  search->add_option("--property", o.property, "topo-gap | non-regular")
      ->required();
  search->add_option("--size", o.size, "search bound");
  add_caps(search);

  CLI::App* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", o.suite,
                     "axioms | derived | corre2 | universal | emb | corm")
      ->required();
  verify->add_option("--count", o.count, "number of random cases");
  verify->add_option("--size", o.size, "size bound");
  verify->add_option("--seed", o.seed_flag, "random seed")
      ->each([&](const std::string&) { o.seed_set = true; });
  add_caps(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (app.got_subcommand("check")) return run_check(o);
    if (app.got_subcommand("saturate")) return run_saturate(o);
    if (app.got_subcommand("extend")) return run_extend(o);
    if (app.got_subcommand("embed")) return run_embed(o);
    if (app.got_subcommand("reduct")) return run_reduct(o);
    if (app.got_subcommand("represent")) return run_represent(o);
    if (app.got_subcommand("lift")) return run_lift(o);
    if (app.got_subcommand("search")) return run_search(o);
    if (app.got_subcommand("verify")) return run_verify(o);
  } catch (const mspec::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const mspec::ValidatorError& e) {
    std::cout << "violation: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitInput;
}
