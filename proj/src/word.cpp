#include "sl2rep/word.hpp"

#include <algorithm>
#include <cctype>

namespace sl2rep {

bool word_less(const Word& u, const Word& v) {
  if (u.length() != v.length()) return u.length() < v.length();
  return std::lexicographical_compare(u.letters.begin(), u.letters.end(), v.letters.begin(),
                                      v.letters.end());
}

Word free_reduce(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (int l : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -l)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

Word word_multiply(const Word& u, const Word& v) {
  Word w;
  w.letters.reserve(u.length() + v.length());
  w.letters = u.letters;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return free_reduce(w);
}

Word word_inverse(const Word& u) {
  Word w;
  w.letters.reserve(u.length());
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) w.letters.push_back(-*it);
  return w;
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.letters.size(); ++i)
    if (w.letters[i] == -w.letters[i - 1]) return false;
  return true;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  const bool compact = std::all_of(names.begin(), names.end(),
                                   [](const std::string& n) { return n.size() == 1; });
  if (w.empty()) return "1";
  std::string out;
  if (compact) {
    for (int l : w.letters) {
      char c = names[static_cast<std::size_t>(std::abs(l)) - 1][0];
      out.push_back(l > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
  } else {
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      if (i) out.push_back(' ');
      int l = w.letters[i];
      out += names[static_cast<std::size_t>(std::abs(l)) - 1];
      if (l < 0) out += "^-1";
    }
  }
  return out;
}

}  // namespace sl2rep
