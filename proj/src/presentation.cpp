#include "sl2rep/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>

#include "sl2rep/errors.hpp"

namespace sl2rep {

namespace {

bool is_name_start(char c) { return c >= 'a' && c <= 'z'; }
bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  std::size_t here() const { return pos + 1; }  // 1-based for messages
};

std::string parse_name(Cursor& cur) {
  std::size_t start = cur.pos;
  if (cur.done() || !is_name_start(cur.peek()))
    throw ParseError("expected generator name", cur.here());
  ++cur.pos;
  while (!cur.done() && is_name_char(cur.peek())) ++cur.pos;
  return cur.text.substr(start, cur.pos - start);
}

// Longest generator name matching at the cursor; the first letter of the text
// may be the uppercase (inverse) form. Returns (index, inverse) or throws.
std::pair<int, bool> match_generator(Cursor& cur, const std::vector<std::string>& names) {
  char first = cur.peek();
  bool inverse = (first >= 'A' && first <= 'Z');
  char lowered = inverse ? static_cast<char>(first - 'A' + 'a') : first;
  int best = -1;
  std::size_t best_len = 0;
  for (std::size_t g = 0; g < names.size(); ++g) {
    const std::string& n = names[g];
    if (n[0] != lowered || cur.pos + n.size() > cur.text.size()) continue;
    if (n.compare(1, n.size() - 1, cur.text, cur.pos + 1, n.size() - 1) != 0) continue;
    if (n.size() > best_len) {
      best = static_cast<int>(g);
      best_len = n.size();
    }
  }
  if (best < 0) throw ParseError("unknown generator name", cur.here());
  cur.pos += best_len;
  return {best + 1, inverse};
}

long parse_exponent(Cursor& cur) {
  ++cur.pos;  // consume '^'
  cur.skip_ws();
  std::size_t at = cur.here();
  bool neg = false;
  if (!cur.done() && (cur.peek() == '-' || cur.peek() == '+')) {
    neg = cur.peek() == '-';
    ++cur.pos;
  }
  if (cur.done() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
    throw ParseError("expected integer exponent", at);
  long v = 0;
  while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    v = v * 10 + (cur.peek() - '0');
    if (v > 1'000'000) throw ParseError("exponent too large", at);
    ++cur.pos;
  }
  if (v == 0) throw ParseError("exponent 0 is not allowed", at);
  return neg ? -v : v;
}

Word parse_word(Cursor& cur, const std::vector<std::string>& names) {
  Word w;
  bool any = false;
  while (true) {
    cur.skip_ws();
    if (cur.done() || cur.peek() == ',') break;
    char c = cur.peek();
    if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')))
      throw ParseError("unexpected character in word", cur.here());
    auto [idx, inverse] = match_generator(cur, names);
    long exp = 1;
    cur.skip_ws();
    if (!cur.done() && cur.peek() == '^') exp = parse_exponent(cur);
    if (inverse) exp = -exp;
    int letter = exp > 0 ? idx : -idx;
    for (long k = 0; k < std::labs(exp); ++k) w.letters.push_back(letter);
    any = true;
  }
  if (!any) throw ParseError("empty relator word", cur.here());
  return free_reduce(w);
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Cursor cur{text};
  Presentation p;
  // generator list
  while (true) {
    cur.skip_ws();
    std::size_t at = cur.here();
    std::string name = parse_name(cur);
    if (std::find(p.generator_names.begin(), p.generator_names.end(), name) !=
        p.generator_names.end())
      throw ParseError("duplicate generator name '" + name + "'", at);
    p.generator_names.push_back(name);
    cur.skip_ws();
    if (!cur.done() && cur.peek() == ',') {
      ++cur.pos;
      continue;
    }
    break;
  }
  cur.skip_ws();
  if (cur.done() || cur.peek() != '|') throw ParseError("expected '|'", cur.here());
  ++cur.pos;
  p.generator_count = static_cast<int>(p.generator_names.size());

  cur.skip_ws();
  if (!cur.done()) {
    while (true) {
      p.relators.push_back(parse_word(cur, p.generator_names));
      cur.skip_ws();
      if (!cur.done() && cur.peek() == ',') {
        ++cur.pos;
        continue;
      }
      break;
    }
    cur.skip_ws();
    if (!cur.done()) throw ParseError("trailing input", cur.here());
  }
  return p;
}

std::string presentation_to_string(const Presentation& p) {
  std::string out;
  for (int i = 0; i < p.generator_count; ++i) {
    if (i) out += ",";
    out += p.generator_names[static_cast<std::size_t>(i)];
  }
  out += " | ";
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    if (j) out += ", ";
    out += word_to_string(p.relators[j], p.generator_names);
  }
  return out;
}

GroupRingElement fox_derivative(const Word& w, int generator_index, int generator_count) {
  if (generator_index < 1 || generator_index > generator_count)
    throw InvalidInputError("fox_derivative: generator index out of range");
  std::map<Word, std::int64_t, decltype([](const Word& a, const Word& b) {
             return word_less(a, b);
           })>
      acc;
  Word prefix;
  for (int l : w.letters) {
    if (l == generator_index) {
      acc[free_reduce(prefix)] += 1;
    } else if (l == -generator_index) {
      Word q = prefix;
      q.letters.push_back(l);
      acc[free_reduce(q)] -= 1;
    }
    prefix.letters.push_back(l);
  }
  GroupRingElement out;
  for (auto& [word, coeff] : acc)
    if (coeff != 0) out.terms.emplace_back(coeff, word);
  return out;
}

std::vector<std::vector<std::int64_t>> relator_exponent_matrix(const Presentation& p) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const Word& r : p.relators) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(p.generator_count), 0);
    for (int l : r.letters) row[static_cast<std::size_t>(std::abs(l)) - 1] += (l > 0 ? 1 : -1);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

using IMat = std::vector<std::vector<std::int64_t>>;

IMat identity_mat(std::size_t n) {
  IMat m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void swap_rows(IMat& m, std::size_t i, std::size_t j) { std::swap(m[i], m[j]); }

void swap_cols(IMat& m, std::size_t i, std::size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

// row_i += q * row_j
void add_row(IMat& m, std::size_t i, std::size_t j, std::int64_t q) {
  for (std::size_t k = 0; k < m[i].size(); ++k) m[i][k] += q * m[j][k];
}

void add_col(IMat& m, std::size_t i, std::size_t j, std::int64_t q) {
  for (auto& row : m) row[i] += q * row[j];
}

void negate_row(IMat& m, std::size_t i) {
  for (auto& x : m[i]) x = -x;
}

}  // namespace

SmithDecomposition smith_normal_form(IMat s) {
  const std::size_t n = s.size();
  const std::size_t m = n ? s[0].size() : 0;
  SmithDecomposition d;
  d.u = identity_mat(n);
  d.v = identity_mat(m);
  const std::size_t p = std::min(n, m);

  for (std::size_t t = 0; t < p; ++t) {
    // locate a pivot of minimal absolute value in the trailing block
    while (true) {
      std::size_t pi = t, pj = t;
      std::int64_t best = 0;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < m; ++j)
          if (s[i][j] != 0 && (best == 0 || std::llabs(s[i][j]) < best)) {
            best = std::llabs(s[i][j]);
            pi = i;
            pj = j;
          }
      if (best == 0) goto done;  // trailing block is zero
      if (pi != t) {
        swap_rows(s, t, pi);
        swap_rows(d.u, t, pi);
      }
      if (pj != t) {
        swap_cols(s, t, pj);
        swap_cols(d.v, t, pj);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (s[i][t] == 0) continue;
        std::int64_t q = s[i][t] / s[t][t];
        add_row(s, i, t, -q);
        add_row(d.u, i, t, -q);
        if (s[i][t] != 0) clean = false;  // remainder left; re-pivot
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        if (s[t][j] == 0) continue;
        std::int64_t q = s[t][j] / s[t][t];
        add_col(s, j, t, -q);
        add_col(d.v, j, t, -q);
        if (s[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // enforce divisibility: pivot must divide everything that remains
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < m && divides; ++j)
          if (s[i][j] % s[t][t] != 0) {
            add_row(s, t, i, 1);
            add_row(d.u, t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (s[t][t] < 0) {
      negate_row(s, t);
      negate_row(d.u, t);
    }
  }
done:
  d.diagonal.resize(p, 0);
  for (std::size_t t = 0; t < p; ++t) d.diagonal[t] = s[t][t];
  return d;
}

AbelianizationResult abelianization(const Presentation& p) {
  const std::size_t n = static_cast<std::size_t>(p.generator_count);
  // columns of B = relator exponent vectors in Z^n
  IMat b(n, std::vector<std::int64_t>(p.relators.size(), 0));
  auto rows = relator_exponent_matrix(p);
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) b[i][j] = rows[j][i];
  SmithDecomposition d = smith_normal_form(b);

  AbelianizationResult out;
  for (std::int64_t di : d.diagonal)
    if (di != 0) out.invariant_factors.push_back(di);
  out.rank_free = static_cast<int>(n - out.invariant_factors.size());
  for (int k = 0; k < out.rank_free; ++k) out.invariant_factors.push_back(0);
  return out;
}

}  // namespace sl2rep
