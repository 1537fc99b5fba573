#pragma once

#include <string>
#include <variant>

#include "mspec/axioms.hpp"
#include "mspec/closure.hpp"
#include "mspec/extension.hpp"
#include "mspec/generate.hpp"
#include "mspec/hom.hpp"
#include "mspec/relation.hpp"
#include "mspec/represent.hpp"

namespace mspec {

// Parse-time caps; soft limits rejected with a clear error. The CLI reads
// defaults from MSPEC_MAX_ELEMENTS / MSPEC_MAX_POINTS, overridable by
// flags. Extension construction defaults to a lower carrier bound.
struct Caps {
  int max_elements = 12;
  int max_points = 16;
};

// A homomorphism file: two structures plus the total map.
struct ParsedHom {
  SpecStructure source;
  SpecStructure target;
  Homomorphism hom;
};

using ParsedStructure =
    std::variant<SpecStructure, ClosureSemilattice, ClosureSpace, ParsedHom>;

// Parses a UTF-8 JSON structure file of kind mspec / csl / cspace / hom.
// Schema problems, unknown element names and cap violations throw
// InputError; structures violating their defining laws (join laws, closure
// laws, intersection-closure) throw ValidatorError. Relative file
// references in hom files resolve against `base_dir`.
ParsedStructure parse_structure(const std::string& text, const Caps& caps,
                                const std::string& base_dir = ".");

// Canonical JSON: keys in schema order, elements in declared order, sets
// sorted by element index, relation pairs sorted by (lhs, rhs mask),
// 2-space indent, LF newlines, trailing newline. parse . serialize is the
// identity on canonical files.
std::string serialize_structure(const SpecStructure& s);
std::string serialize_structure(const ClosureSemilattice& s);
std::string serialize_structure(const ClosureSpace& s);
std::string serialize_structure(const ParsedHom& h);

// Closure-semilattice JSON plus a class-map section: representative pair
// and label per class, and the unit table. Re-parses as a csl.
std::string serialize_extension(const FreeExtension& e);

// Space plus per-element point sets (and the ground size, for represent).
std::string serialize_embedding(const SpaceEmbedding& e);
std::string serialize_representation(const Representation& r);

// Report rendering, JSON and human-oriented text. Names come from the
// structure the report was computed on.
std::string render_table_violation(const TableViolation& v,
                                   const FiniteJoinSemilattice& lat);
std::string render_law_report_json(const LawReport& r,
                                   const FiniteJoinSemilattice& lat);
std::string render_law_report_text(const LawReport& r,
                                   const FiniteJoinSemilattice& lat);
std::string render_hom_report_json(const HomReport& r, const ParsedHom& h);
std::string render_regularity_json(const RegularityReport& r,
                                   const FiniteJoinSemilattice& lat);

// Element-name surface syntax shared by all formats.
std::string set_to_string(Mask m, const std::vector<std::string>& names);

}  // namespace mspec
