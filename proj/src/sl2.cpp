#include "sl2rep/sl2.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sl2rep/errors.hpp"

namespace sl2rep {

double Mat2::frobenius() const { return std::sqrt(frobenius_sq()); }

double Mat2::max_abs() const {
  return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
}

bool Mat2::is_finite() const {
  auto ok = [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  return ok(a) && ok(b) && ok(c) && ok(d);
}

double distance(const Mat2& x, const Mat2& y) { return (x - y).frobenius(); }

SL2Element make_sl2(const Mat2& m, double tol) {
  if (!m.is_finite()) throw NumericError("SL2Element: non-finite entries");
  if (std::abs(m.det() - 1.0) > tol)
    throw NumericError("SL2Element: determinant drift " + std::to_string(std::abs(m.det() - 1.0)));
  return SL2Element{m};
}

SL2Element operator*(const SL2Element& g, const SL2Element& h) {
  return make_sl2(g.m * h.m, 10.0 * kDetTol);
}

SL2Element inv(const SL2Element& g) { return make_sl2(g.m.adjugate(), 10.0 * kDetTol); }

double Sl2Vector::norm() const { return std::sqrt(norm_sq()); }

Sl2Vector traceless_part(const Mat2& m) {
  cplx half_tr = 0.5 * m.trace();
  return {m.a - half_tr, m.b, m.c};
}

SL2Element exp_traceless(const Sl2Vector& x) {
  Mat2 m = x.to_matrix();
  cplx lam2 = -m.det();  // Cayley-Hamilton: X^2 = lam2 * I
  cplx ch, shc;
  if (std::abs(lam2) < 1e-8) {
    ch = 1.0 + lam2 * (0.5 + lam2 * (1.0 / 24.0 + lam2 / 720.0));
    shc = 1.0 + lam2 * (1.0 / 6.0 + lam2 * (1.0 / 120.0 + lam2 / 5040.0));
  } else {
    cplx lam = std::sqrt(lam2);
    ch = std::cosh(lam);
    shc = std::sinh(lam) / lam;
  }
  Mat2 r = ch * Mat2::identity() + shc * m;
  return make_sl2(r, 10.0 * kDetTol);
}

Eigen::Matrix3cd adjoint_matrix(const SL2Element& g) {
  static const Mat2 basis[3] = {{1, 0, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}};
  Mat2 gi = g.m.adjugate();
  Eigen::Matrix3cd ad;
  for (int k = 0; k < 3; ++k) {
    Mat2 c = g.m * basis[k] * gi;
    ad(0, k) = c.a;
    ad(1, k) = c.b;
    ad(2, k) = c.c;
  }
  return ad;
}

double cartan_mu(const SL2Element& g) {
  double f2 = g.m.frobenius_sq();
  double disc = f2 * f2 - 4.0;
  if (disc < 0.0) disc = 0.0;
  double s1sq = 0.5 * (f2 + std::sqrt(disc));
  if (s1sq < 1.0) s1sq = 1.0;
  return 0.5 * std::log(s1sq);
}

cplx killing_pairing(const Sl2Vector& x, const Sl2Vector& y) {
  // tr(XY) = 2 h_x h_y + e_x f_y + f_x e_y
  return 8.0 * x.h * y.h + 4.0 * (x.e * y.f + x.f * y.e);
}

namespace {

// Hermitian 2x2 matrices over the real coordinates (p, Re q, Im q, s).
Mat2 hermitian_from(const Eigen::Vector4d& v) {
  cplx q{v[1], v[2]};
  return {cplx{v[0], 0.0}, q, std::conj(q), cplx{v[3], 0.0}};
}

Eigen::Vector4d hermitian_coords(const Mat2& h) {
  return {h.a.real(), h.b.real(), h.b.imag(), h.d.real()};
}

bool positive_definite(const Mat2& h, double margin) {
  double tr = h.trace().real();
  double det = h.det().real();
  double disc = tr * tr - 4.0 * det;
  if (disc < 0.0) disc = 0.0;
  double lmin = 0.5 * (tr - std::sqrt(disc));
  double lmax = 0.5 * (tr + std::sqrt(disc));
  return lmin > margin * std::max(std::abs(lmax), 1e-300);
}

}  // namespace

std::optional<Mat2> invariant_hermitian_form(std::span<const SL2Element> mats,
                                             const HermitianSearchOptions& opts) {
  if (mats.empty()) throw InvalidInputError("invariant_hermitian_form: empty input");

  // Real-linear invariance system: rows = coordinates of g^H H g - H.
  Eigen::MatrixXd sys(4 * static_cast<int>(mats.size()), 4);
  for (int gi = 0; gi < static_cast<int>(mats.size()); ++gi) {
    const Mat2& g = mats[static_cast<std::size_t>(gi)].m;
    for (int k = 0; k < 4; ++k) {
      Eigen::Vector4d e = Eigen::Vector4d::Zero();
      e[k] = 1.0;
      Mat2 h = hermitian_from(e);
      Mat2 d = g.conj_transpose() * h * g - h;
      sys.block<4, 1>(4 * gi, k) = hermitian_coords(d);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  // scale floor 1: an all-tiny spectrum means every Hermitian form is fixed
  double cutoff = opts.kernel_tol * std::max(sv(0), 1.0);
  int kdim = 0;
  for (int k = 3; k >= 0; --k) {
    if (sv(k) <= cutoff)
      ++kdim;
    else
      break;
  }
  if (kdim == 0) return std::nullopt;

  Eigen::MatrixXd kernel = svd.matrixV().rightCols(kdim);

  auto accept = [&](Eigen::Vector4d v) -> std::optional<Mat2> {
    double n = v.norm();
    if (n < 1e-12) return std::nullopt;
    v /= n;
    for (double sign : {1.0, -1.0}) {
      Mat2 h = hermitian_from(sign * v);
      if (!positive_definite(h, opts.definiteness_margin)) continue;
      double hn = h.frobenius();
      double worst = 0.0;
      for (const SL2Element& g : mats)
        worst = std::max(worst, distance(g.m.conj_transpose() * h * g.m, h));
      if (worst > opts.invariance_tol * hn) continue;
      // normalize to trace 2 for a canonical certificate
      return (2.0 / h.trace().real()) * h;
    }
    return std::nullopt;
  };

  // Projection of the identity form onto the kernel settles the unitary cases.
  Eigen::Vector4d id_coords(1.0, 0.0, 0.0, 1.0);
  if (auto h = accept(kernel * (kernel.transpose() * id_coords))) return h;
  for (int k = 0; k < kdim; ++k)
    if (auto h = accept(kernel.col(k))) return h;
  if (kdim == 2) {
    const int steps = 2048;
    for (int s = 0; s < steps; ++s) {
      double th = 2.0 * M_PI * s / steps;
      if (auto h = accept(std::cos(th) * kernel.col(0) + std::sin(th) * kernel.col(1))) return h;
    }
  } else if (kdim >= 3) {
    std::mt19937 rng(opts.seed);
    std::normal_distribution<double> gauss;
    for (int s = 0; s < 4096; ++s) {
      Eigen::VectorXd w(kdim);
      for (int k = 0; k < kdim; ++k) w[k] = gauss(rng);
      if (auto h = accept(kernel * w)) return h;
    }
  }
  return std::nullopt;
}

}  // namespace sl2rep
