#include "sl2rep/ball.hpp"

#include <cmath>
#include <unordered_map>

#include "sl2rep/errors.hpp"

namespace sl2rep {

namespace {

// Buckets on quantized (Re tr, Im tr); duplicates can only land in the same
// or an adjacent cell while matrix norms stay below ~kCell/(2*kDedupTol).
constexpr double kCell = 1e-2;

struct TraceKey {
  long long re, im;
  bool operator==(const TraceKey&) const = default;
};

struct TraceKeyHash {
  std::size_t operator()(const TraceKey& k) const {
    return std::hash<long long>()(k.re * 1000003LL + k.im);
  }
};

TraceKey key_of(const Mat2& m) {
  cplx tr = m.trace();
  return {static_cast<long long>(std::llround(tr.real() / kCell)),
          static_cast<long long>(std::llround(tr.imag() / kCell))};
}

bool same_element(const Mat2& x, const Mat2& y) {
  double scale = std::max(1.0, std::max(x.max_abs(), y.max_abs()));
  return (x - y).max_abs() < kDedupTol * scale;
}

}  // namespace

std::vector<BallElement> enumerate_ball(const Presentation& p, const Representation& dedup_rep,
                                        int max_length, std::size_t budget) {
  if (max_length < 1) throw InvalidInputError("enumerate_ball: max_length must be >= 1");
  if (dedup_rep.presentation.generator_count != p.generator_count)
    throw InvalidInputError("enumerate_ball: reference representation mismatch");

  std::vector<BallElement> out;
  std::unordered_multimap<TraceKey, std::size_t, TraceKeyHash> buckets;

  auto find_dup = [&](const Mat2& m) {
    TraceKey k = key_of(m);
    for (long long dre = -1; dre <= 1; ++dre)
      for (long long dim = -1; dim <= 1; ++dim) {
        auto range = buckets.equal_range({k.re + dre, k.im + dim});
        for (auto it = range.first; it != range.second; ++it)
          if (same_element(m, out[it->second].image.m)) return true;
      }
    return false;
  };
  auto insert = [&](Word w, const Mat2& m) {
    buckets.emplace(key_of(m), out.size());
    out.push_back({std::move(w), make_sl2(m, 1e-6)});
  };

  insert(Word{}, Mat2::identity());
  std::size_t examined = 1;
  std::size_t frontier_begin = 0, frontier_end = 1;

  std::vector<Mat2> gen_mats;
  std::vector<int> letters;
  for (int i = 1; i <= p.generator_count; ++i) {
    const Mat2& g = dedup_rep.images[static_cast<std::size_t>(i) - 1].m;
    gen_mats.push_back(g);
    letters.push_back(i);
    gen_mats.push_back(g.adjugate());
    letters.push_back(-i);
  }

  for (int len = 1; len <= max_length; ++len) {
    for (std::size_t f = frontier_begin; f < frontier_end; ++f) {
      // copy: out grows while we iterate
      Word w = out[f].word;
      Mat2 m = out[f].image.m;
      for (std::size_t g = 0; g < gen_mats.size(); ++g) {
        if (!w.letters.empty() && w.letters.back() == -letters[g]) continue;
        if (++examined > budget)
          throw BudgetError("enumerate_ball: element budget " + std::to_string(budget) +
                            " exceeded at length " + std::to_string(len));
        Mat2 m2 = m * gen_mats[g];
        if (find_dup(m2)) continue;
        Word w2 = w;
        w2.letters.push_back(letters[g]);
        insert(std::move(w2), m2);
      }
    }
    frontier_begin = frontier_end;
    frontier_end = out.size();
  }
  return out;
}

}  // namespace sl2rep
