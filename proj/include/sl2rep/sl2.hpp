#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace sl2rep {

using cplx = std::complex<double>;

inline constexpr double kDetTol = 1e-9;

// Dense 2x2 complex matrix, row-major (a b / c d).
struct Mat2 {
  cplx a{}, b{}, c{}, d{};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }

  cplx det() const { return a * d - b * c; }
  cplx trace() const { return a + d; }
  Mat2 adjugate() const { return {d, -b, -c, a}; }
  Mat2 conj_transpose() const {
    return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
  }
  double frobenius_sq() const {
    return std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
  }
  double frobenius() const;
  double max_abs() const;
  bool is_finite() const;

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator*(cplx s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
};

double distance(const Mat2& x, const Mat2& y);

// Unimodular 2x2 matrix; construction checks |det - 1| against a tolerance.
struct SL2Element {
  Mat2 m;
};

// Throws NumericError when |det(m) - 1| > tol or entries are not finite.
SL2Element make_sl2(const Mat2& m, double tol = kDetTol);

// Product / inverse; the unimodularity drift check runs at 10 * kDetTol.
SL2Element operator*(const SL2Element& g, const SL2Element& h);
SL2Element inv(const SL2Element& g);

// Traceless 2x2 matrix in coordinates over the basis
// H = (1 0 / 0 -1), E = (0 1 / 0 0), F = (0 0 / 1 0).
struct Sl2Vector {
  cplx h{}, e{}, f{};

  Mat2 to_matrix() const { return {h, e, f, -h}; }
  static Sl2Vector from_matrix(const Mat2& m) { return {m.a, m.b, m.c}; }
  double norm_sq() const { return std::norm(h) + std::norm(e) + std::norm(f); }
  double norm() const;

  friend Sl2Vector operator+(const Sl2Vector& x, const Sl2Vector& y) {
    return {x.h + y.h, x.e + y.e, x.f + y.f};
  }
  friend Sl2Vector operator-(const Sl2Vector& x, const Sl2Vector& y) {
    return {x.h - y.h, x.e - y.e, x.f - y.f};
  }
  friend Sl2Vector operator*(cplx s, const Sl2Vector& x) { return {s * x.h, s * x.e, s * x.f}; }
};

// Traceless projection m - (tr m / 2) I, as sl2 coordinates.
Sl2Vector traceless_part(const Mat2& m);

// Closed-form exponential of a traceless matrix:
// exp(X) = cosh(l) I + sinhc(l) X with l^2 = -det(X); always unimodular.
SL2Element exp_traceless(const Sl2Vector& x);

// Matrix of Ad(g): X -> g X g^-1 on sl2 in the (H, E, F) basis.
Eigen::Matrix3cd adjoint_matrix(const SL2Element& g);

// Cartan projection: log of the largest singular value. Nonnegative since
// det = 1; exact 2x2 closed form from the Frobenius norm.
double cartan_mu(const SL2Element& g);

// Killing form kappa(X, Y) = 4 tr(XY); symmetric and Ad-invariant.
cplx killing_pairing(const Sl2Vector& x, const Sl2Vector& y);

struct HermitianSearchOptions {
  double kernel_tol = 1e-10;       // relative SVD cutoff for the invariance kernel
  double definiteness_margin = 1e-8;  // required lambda_min / lambda_max
  double invariance_tol = 1e-8;    // max_g |g^H H g - H| / |H|
  unsigned seed = 12345;           // sampling fallback for kernel dims >= 3
};

// Searches for a positive-definite Hermitian H with g^H H g = H for every
// input; a result certifies that the generated group has compact closure.
// Returns the certificate normalized to trace 2, or nullopt.
std::optional<Mat2> invariant_hermitian_form(std::span<const SL2Element> mats,
                                             const HermitianSearchOptions& opts = {});

}  // namespace sl2rep
