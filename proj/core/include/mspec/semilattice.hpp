#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mspec/bits.hpp"

namespace mspec {

// Finite join-semilattice: a nonempty carrier of named elements and a total
// join table over element indices. Names are surface syntax only; all
// computation happens on indices.
struct FiniteJoinSemilattice {
  std::vector<std::string> elements;
  std::vector<int> table;  // row-major n*n, table[i*n+j] = index of i v j

  int size() const { return static_cast<int>(elements.size()); }

  int join(int a, int b) const { return table[a * size() + b]; }

  // a <= b  iff  a v b = b
  bool leq(int a, int b) const { return join(a, b) == b; }

  // Least upper bound of a nonempty subset (exists in any finite
  // join-semilattice). Throws on the empty set.
  int join_set(Mask s) const;

  // {y | y <= a} as a mask. Requires size() <= 31.
  Mask down_set(int a) const;

  int top() const;  // join of the whole carrier

  // Index of a name, or -1.
  int index_of(const std::string& name) const;
};

// First violated semilattice law, if any. The law names are stable strings
// used in reports: "idempotence", "commutativity", "associativity".
struct TableViolation {
  std::string law;
  int a = -1, b = -1, c = -1;
};

// Checks the three join laws exhaustively. Shape problems (wrong table size,
// out-of-range entry, empty carrier, duplicate names) throw InputError.
std::optional<TableViolation> validate_join_table(
    const FiniteJoinSemilattice& lat);

}  // namespace mspec
