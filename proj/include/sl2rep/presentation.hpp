#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sl2rep/word.hpp"

namespace sl2rep {

// Finite presentation <g_1,...,g_n | R_1,...,R_m>. Relators are stored freely
// reduced; an empty relator list describes a free group.
struct Presentation {
  int generator_count = 0;
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Grammar:
//   presentation := gen_list "|" relator_list?
//   gen_list     := name ("," name)*        name := [a-z][a-z0-9_]*
//   relator_list := word ("," word)*
//   word         := atom+                   atom := name exponent? | NAME
//   exponent     := "^" nonzero-integer
// An atom whose first letter is uppercase denotes the inverse generator.
// Whitespace separates tokens and is otherwise ignored. Longest generator-name
// match wins when names share a prefix. Throws ParseError with a 1-based
// position on malformed input, unknown generator names, or exponent 0.
Presentation parse_presentation(const std::string& text);

std::string presentation_to_string(const Presentation& p);

// Integral group-ring element over the free group, in canonical form: terms
// sorted shortlex by word, no zero coefficients, no repeated words.
struct GroupRingElement {
  std::vector<std::pair<std::int64_t, Word>> terms;

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;
};

// Fox free derivative d(w)/d(g_i). Satisfies d(g_i)/d(g_i) = 1,
// d(g_j)/d(g_i) = 0, d(uv) = d(u) + u d(v), d(g_i^-1)/d(g_i) = -g_i^-1.
GroupRingElement fox_derivative(const Word& w, int generator_index, int generator_count);

// Invariant factors d_1 | d_2 | ... of Z^n modulo the relator exponent rows;
// zeros encode free Z factors, rank_free counts them (= b_1).
struct AbelianizationResult {
  std::vector<std::int64_t> invariant_factors;
  int rank_free = 0;
};

AbelianizationResult abelianization(const Presentation& p);

// Smith normal form U*B*V = S of an integer matrix B (row-major n x m), with
// U, V unimodular and S diagonal with the divisibility chain. Used by the
// abelianization and by the abelian-character enumeration.
struct SmithDecomposition {
  std::vector<std::vector<std::int64_t>> u;  // n x n
  std::vector<std::vector<std::int64_t>> v;  // m x m
  std::vector<std::int64_t> diagonal;        // length min(n, m), d_i >= 0
};

SmithDecomposition smith_normal_form(std::vector<std::vector<std::int64_t>> b);

// Column i = exponent sums of generator i+1 in relator j (rows = relators).
std::vector<std::vector<std::int64_t>> relator_exponent_matrix(const Presentation& p);

}  // namespace sl2rep
