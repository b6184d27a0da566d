#pragma once

#include <string>
#include <vector>

namespace sl2rep {

// A word in a free group: signed 1-based generator indices, positive for a
// generator and negative for its inverse. The empty word is the identity.
struct Word {
  std::vector<int> letters;

  bool empty() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }

  friend bool operator==(const Word&, const Word&) = default;
};

// Shortlex order (length first, then letter sequence); total on reduced words.
bool word_less(const Word& u, const Word& v);

// Unique freely reduced word equal to w; idempotent and length-nonincreasing.
Word free_reduce(const Word& w);

// Concatenate then reduce.
Word word_multiply(const Word& u, const Word& v);

// Reverse and negate; reduced input stays reduced.
Word word_inverse(const Word& u);

bool is_freely_reduced(const Word& w);

// Compact rendering: single lowercase letters with uppercase inverses when all
// generator names are one character ("aaB"), otherwise "a a b^-1".
std::string word_to_string(const Word& w, const std::vector<std::string>& generator_names);

}  // namespace sl2rep
