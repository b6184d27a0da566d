#include "sl2rep/representation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "sl2rep/errors.hpp"

namespace sl2rep {

namespace {

void check_letters(const Presentation& p, const Word& w) {
  for (int l : w.letters)
    if (l == 0 || std::abs(l) > p.generator_count)
      throw InvalidInputError("word letter out of range");
}

Mat2 eval_raw(const std::vector<SL2Element>& images, const Word& w) {
  Mat2 m = Mat2::identity();
  for (int l : w.letters) {
    const Mat2& g = images[static_cast<std::size_t>(std::abs(l)) - 1].m;
    m = m * (l > 0 ? g : g.adjugate());
  }
  return m;
}

double max_relator_defect(const Presentation& p, const std::vector<SL2Element>& images) {
  double worst = 0.0;
  for (const Word& r : p.relators)
    worst = std::max(worst, (eval_raw(images, r) - Mat2::identity()).frobenius());
  return worst;
}

}  // namespace

Representation make_representation(Presentation p, std::vector<SL2Element> images) {
  if (static_cast<int>(images.size()) != p.generator_count)
    throw InvalidInputError("make_representation: expected " +
                            std::to_string(p.generator_count) + " images, got " +
                            std::to_string(images.size()));
  double res = max_relator_defect(p, images);
  return Representation{std::move(p), std::move(images), res};
}

Representation trivial_representation(const Presentation& p) {
  std::vector<SL2Element> images(static_cast<std::size_t>(p.generator_count),
                                 SL2Element{Mat2::identity()});
  return Representation{p, std::move(images), 0.0};
}

SL2Element evaluate_word(const Representation& rho, const Word& w) {
  check_letters(rho.presentation, w);
  return make_sl2(eval_raw(rho.images, w), 1e-6);  // long products: loose drift guard only
}

double relator_residual(const Representation& rho) {
  return max_relator_defect(rho.presentation, rho.images);
}

namespace {

// vec_r(A X B) = (A kron B^T) vec_r(X) for row-major vec (x00 x01 x10 x11).
Eigen::Matrix4cd kron_conjugation(const Mat2& a, const Mat2& binv) {
  Eigen::Matrix2cd ae, bte;
  ae << a.a, a.b, a.c, a.d;
  bte << binv.a, binv.c, binv.b, binv.d;  // transpose of binv
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = ae(i, j) * bte;
  return out;
}

Eigen::Vector4cd vec_row(const Mat2& m) { return {m.a, m.b, m.c, m.d}; }

Mat2 from_vec_row(const Eigen::Vector4cd& v) { return {v[0], v[1], v[2], v[3]}; }

// exp of a general 2x2 via the traceless split.
Mat2 exp_gl2(const Mat2& x) {
  cplx s = 0.5 * x.trace();
  Sl2Vector x0 = traceless_part(x);
  Mat2 e = exp_traceless(x0).m;
  return std::exp(s) * e;
}

double newton_measure(const Presentation& p, const std::vector<SL2Element>& images) {
  double worst = 0.0;
  for (const SL2Element& g : images) worst = std::max(worst, std::abs(g.m.det() - 1.0));
  for (const Word& r : p.relators)
    worst = std::max(worst, (eval_raw(images, r) - Mat2::identity()).frobenius());
  return worst;
}

}  // namespace

Representation newton_refine(const Representation& rho0, const NewtonOptions& opts) {
  const Presentation& p = rho0.presentation;
  const int n = p.generator_count;
  const int m = static_cast<int>(p.relators.size());
  if (rho0.residual <= opts.tol) return rho0;

  std::vector<SL2Element> images = rho0.images;
  double measure = newton_measure(p, images);

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(4 * m + n, 4 * n);
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(4 * m + n);

    for (int j = 0; j < m; ++j) {
      const Word& r = p.relators[static_cast<std::size_t>(j)];
      Mat2 w = eval_raw(images, r);
      rhs.segment<4>(4 * j) = vec_row(Mat2::identity() - w);
      // d eval(R) = (sum_i FoxAd_i(X_i)) * eval(R) with X_i in gl2;
      // vec_r(Y W) = (I2 kron W^T) vec_r(Y).
      Eigen::Matrix2cd wt;
      wt << w.a, w.c, w.b, w.d;
      Eigen::Matrix4cd iw = Eigen::Matrix4cd::Zero();
      iw.block<2, 2>(0, 0) = wt;
      iw.block<2, 2>(2, 2) = wt;
      for (int i = 1; i <= n; ++i) {
        Eigen::Matrix4cd fox_ad = Eigen::Matrix4cd::Zero();
        for (const auto& [coeff, word] : fox_derivative(r, i, n).terms) {
          Mat2 gw = eval_raw(images, word);
          fox_ad += static_cast<double>(coeff) * kron_conjugation(gw, gw.adjugate());
        }
        jac.block<4, 4>(4 * j, 4 * (i - 1)) = iw * fox_ad;
      }
    }
    for (int i = 0; i < n; ++i) {
      cplx det = images[static_cast<std::size_t>(i)].m.det();
      jac(4 * m + i, 4 * i + 0) = det;  // coefficient of x00 in tr(X) det(g)
      jac(4 * m + i, 4 * i + 3) = det;  // coefficient of x11
      rhs(4 * m + i) = 1.0 - det;
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.singularValues().size() == 0 || svd.singularValues()(0) < 1e-14)
      throw NumericError("newton_refine: singular normal equations");
    svd.setThreshold(1e-12);
    Eigen::VectorXcd step = svd.solve(rhs);

    bool accepted = false;
    double alpha = 1.0;
    for (int h = 0; h <= opts.max_halvings; ++h, alpha *= 0.5) {
      std::vector<SL2Element> trial = images;
      for (int i = 0; i < n; ++i) {
        Mat2 x = from_vec_row(alpha * step.segment<4>(4 * i));
        Mat2 g = exp_gl2(x) * trial[static_cast<std::size_t>(i)].m;
        if (!g.is_finite()) goto next_alpha;
        trial[static_cast<std::size_t>(i)] = SL2Element{g};
      }
      {
        double trial_measure = newton_measure(p, trial);
        if (trial_measure < measure) {
          images = std::move(trial);
          measure = trial_measure;
          accepted = true;
          break;
        }
      }
    next_alpha:;
    }
    if (!accepted) throw ConvergenceError("newton_refine: stalled, residual " +
                                          std::to_string(measure));
    if (measure <= opts.tol) {
      std::vector<SL2Element> checked;
      checked.reserve(images.size());
      for (const SL2Element& g : images) checked.push_back(make_sl2(g.m, 10.0 * kDetTol));
      return make_representation(p, std::move(checked));
    }
  }
  throw ConvergenceError("newton_refine: no convergence within max_iter, residual " +
                         std::to_string(measure));
}

std::vector<Representation> abelian_representations(const Presentation& p) {
  AbelianizationResult ab = abelianization(p);
  if (ab.rank_free > 0)
    throw InvalidInputError(
        "abelian_representations: continuous family - enumeration refused (torus dimension " +
        std::to_string(ab.rank_free) + ")");

  const std::size_t n = static_cast<std::size_t>(p.generator_count);
  // columns of B = relator exponent vectors; U x gives coordinates in which
  // the quotient splits as a product of cyclic groups of order diagonal[k]
  std::vector<std::vector<std::int64_t>> b(n, std::vector<std::int64_t>(p.relators.size(), 0));
  auto rows = relator_exponent_matrix(p);
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) b[i][j] = rows[j][i];
  SmithDecomposition d = smith_normal_form(b);

  std::vector<std::int64_t> orders;
  for (std::int64_t di : d.diagonal)
    if (di != 0) orders.push_back(di);
  // rank_free == 0 guarantees every generator coordinate is torsion
  const std::size_t r = orders.size();

  std::vector<Representation> out;
  std::vector<std::int64_t> tuple(r, 0);
  while (true) {
    std::vector<SL2Element> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      double angle = 0.0;
      for (std::size_t k = 0; k < r; ++k)
        angle += 2.0 * std::numbers::pi * static_cast<double>(tuple[k]) *
                 static_cast<double>(d.u[k][i]) / static_cast<double>(orders[k]);
      cplx z = std::polar(1.0, angle);
      images.push_back(make_sl2({z, 0.0, 0.0, std::conj(z)}));
    }
    Representation rho = make_representation(p, std::move(images));
    if (rho.residual > 1e-12)
      throw NumericError("abelian_representations: residual " + std::to_string(rho.residual));
    out.push_back(std::move(rho));
    // odometer over character tuples
    std::size_t k = 0;
    while (k < r && ++tuple[k] == orders[k]) tuple[k++] = 0;
    if (k == r) break;
  }
  return out;
}

std::vector<Representation> dedup_by_conjugacy(const std::vector<Representation>& reps) {
  std::vector<Representation> kept;
  for (const Representation& rho : reps) {
    bool dup = false;
    for (const Representation& seen : kept)
      if (intertwiner_between(seen, rho)) {
        dup = true;
        break;
      }
    if (!dup) kept.push_back(rho);
  }
  return kept;
}

Representation conjugate_representation(const Representation& rho, const SL2Element& g) {
  SL2Element gi = inv(g);
  std::vector<SL2Element> images;
  images.reserve(rho.images.size());
  for (const SL2Element& x : rho.images) images.push_back(g * x * gi);
  return make_representation(rho.presentation, std::move(images));
}

CharacterSample character_sample(const Representation& rho, const std::vector<Word>& words) {
  CharacterSample s;
  s.words = words;
  s.traces.reserve(words.size());
  for (const Word& w : words) s.traces.push_back(evaluate_word(rho, w).m.trace());
  return s;
}

bool characters_equal(const CharacterSample& s1, const CharacterSample& s2, double tol) {
  if (s1.traces.size() != s2.traces.size())
    throw InvalidInputError("characters_equal: sample size mismatch");
  for (std::size_t i = 0; i < s1.traces.size(); ++i)
    if (std::abs(s1.traces[i] - s2.traces[i]) > tol) return false;
  return true;
}

std::optional<SL2Element> intertwiner_between(const Representation& rho,
                                              const Representation& eta) {
  if (rho.presentation != eta.presentation)
    throw InvalidInputError("intertwiner_between: presentations differ");
  const int n = rho.presentation.generator_count;

  // X rho(g_i) = eta(g_i) X: rows of (eta_i kron I - I kron rho_i^T).
  Eigen::MatrixXcd sys(4 * n, 4);
  for (int i = 0; i < n; ++i) {
    const Mat2& a = eta.images[static_cast<std::size_t>(i)].m;
    const Mat2& b = rho.images[static_cast<std::size_t>(i)].m;
    Eigen::Matrix4cd left = Eigen::Matrix4cd::Zero();
    left.block<2, 2>(0, 0) = a.a * Eigen::Matrix2cd::Identity();
    left.block<2, 2>(0, 2) = a.b * Eigen::Matrix2cd::Identity();
    left.block<2, 2>(2, 0) = a.c * Eigen::Matrix2cd::Identity();
    left.block<2, 2>(2, 2) = a.d * Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd bt;
    bt << b.a, b.c, b.b, b.d;
    Eigen::Matrix4cd right = Eigen::Matrix4cd::Zero();
    right.block<2, 2>(0, 0) = bt;
    right.block<2, 2>(2, 2) = bt;
    sys.block<4, 4>(4 * i, 0) = left - right;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  // scale floor 1: identical representations give an all-tiny spectrum
  double cutoff = 1e-10 * std::max(sv(0), 1.0);
  int kdim = 0;
  for (int k = 3; k >= 0; --k) {
    if (sv(k) <= cutoff)
      ++kdim;
    else
      break;
  }
  if (kdim == 0) return std::nullopt;
  Eigen::MatrixXcd kernel = svd.matrixV().rightCols(kdim);

  // det is a quadratic form on the kernel; probe a fixed candidate family for
  // an invertible element.
  auto det_of = [](const Eigen::Vector4cd& v) { return v[0] * v[3] - v[1] * v[2]; };
  std::vector<Eigen::Vector4cd> candidates;
  for (int k = 0; k < kdim; ++k) candidates.push_back(kernel.col(k));
  const cplx iu(0.0, 1.0);
  for (int k1 = 0; k1 < kdim; ++k1)
    for (int k2 = k1 + 1; k2 < kdim; ++k2) {
      candidates.push_back(kernel.col(k1) + kernel.col(k2));
      candidates.push_back(kernel.col(k1) - kernel.col(k2));
      candidates.push_back(kernel.col(k1) + iu * kernel.col(k2));
    }
  if (kdim >= 3) {
    // deterministic extra probes spanning all columns
    Eigen::Vector4cd acc = Eigen::Vector4cd::Zero();
    for (int k = 0; k < kdim; ++k) acc += std::pow(cplx(0.5, 0.25), k) * kernel.col(k);
    candidates.push_back(acc);
  }

  const Eigen::Vector4cd* best = nullptr;
  double best_det = 0.0;
  for (const auto& v : candidates) {
    double nd = std::abs(det_of(v)) / std::max(v.squaredNorm(), 1e-300);
    if (nd > best_det) {
      best_det = nd;
      best = &v;
    }
  }
  if (!best || best_det < 1e-6) return std::nullopt;

  Eigen::Vector4cd v = *best / std::sqrt(det_of(*best));
  Mat2 x{v[0], v[1], v[2], v[3]};
  SL2Element g = make_sl2(x, 1e-6);
  // confirm the conjugation within tolerance
  SL2Element gi = inv(g);
  for (int i = 0; i < n; ++i) {
    Mat2 lhs = g.m * rho.images[static_cast<std::size_t>(i)].m * gi.m;
    const Mat2& want = eta.images[static_cast<std::size_t>(i)].m;
    if (distance(lhs, want) > 1e-8 * std::max(1.0, want.frobenius())) return std::nullopt;
  }
  return g;
}

}  // namespace sl2rep
