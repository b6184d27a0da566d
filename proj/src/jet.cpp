#include "sl2rep/jet.hpp"

#include <algorithm>
#include <cmath>

#include "sl2rep/errors.hpp"

namespace sl2rep {

Jet Jet::constant(cplx value, int order) {
  Jet j(order);
  j.coeff(0) = value;
  return j;
}

namespace {

void check_orders(int x, int y) {
  if (x != y) throw InvalidInputError("jet arithmetic: truncation orders differ");
}

}  // namespace

Jet operator+(const Jet& x, const Jet& y) {
  check_orders(x.order(), y.order());
  Jet z(x.order());
  for (int k = 0; k <= x.order(); ++k) z.coeff(k) = x.coeff(k) + y.coeff(k);
  return z;
}

Jet operator-(const Jet& x, const Jet& y) {
  check_orders(x.order(), y.order());
  Jet z(x.order());
  for (int k = 0; k <= x.order(); ++k) z.coeff(k) = x.coeff(k) - y.coeff(k);
  return z;
}

Jet operator*(const Jet& x, const Jet& y) {
  check_orders(x.order(), y.order());
  Jet z(x.order());
  for (int k = 0; k <= x.order(); ++k)
    for (int i = 0; i <= k; ++i) z.coeff(k) += x.coeff(i) * y.coeff(k - i);
  return z;
}

Jet operator*(cplx s, const Jet& x) {
  Jet z(x.order());
  for (int k = 0; k <= x.order(); ++k) z.coeff(k) = s * x.coeff(k);
  return z;
}

MatrixJet MatrixJet::constant(const Mat2& m, int order) {
  return {Jet::constant(m.a, order), Jet::constant(m.b, order), Jet::constant(m.c, order),
          Jet::constant(m.d, order)};
}

MatrixJet operator+(const MatrixJet& x, const MatrixJet& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

MatrixJet operator-(const MatrixJet& x, const MatrixJet& y) {
  return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

MatrixJet jet_mul(const MatrixJet& x, const MatrixJet& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

MatrixJet jet_inv(const MatrixJet& x) {
  const int n = x.order();
  Mat2 a0 = x.coefficient(0);
  if (std::abs(a0.det()) < 1e-12)
    throw NumericError("jet_inv: singular constant term");
  Mat2 b0 = (1.0 / a0.det()) * a0.adjugate();

  std::vector<Mat2> b(static_cast<std::size_t>(n) + 1);
  b[0] = b0;
  for (int k = 1; k <= n; ++k) {
    Mat2 acc = Mat2::zero();
    for (int j = 1; j <= k; ++j) acc = acc + x.coefficient(j) * b[static_cast<std::size_t>(k - j)];
    b[static_cast<std::size_t>(k)] = (-1.0) * (b0 * acc);
  }
  MatrixJet out = MatrixJet::constant(Mat2::zero(), n);
  for (int k = 0; k <= n; ++k) {
    const Mat2& m = b[static_cast<std::size_t>(k)];
    out.a.coeff(k) = m.a;
    out.b.coeff(k) = m.b;
    out.c.coeff(k) = m.c;
    out.d.coeff(k) = m.d;
  }
  return out;
}

MatrixJet exp_jet(const MatrixJet& x) {
  const int n = x.order();
  if (x.coefficient(0).max_abs() > 1e-12)
    throw InvalidInputError("exp_jet: nonzero constant term");
  MatrixJet acc = MatrixJet::identity(n);
  MatrixJet term = MatrixJet::identity(n);
  for (int j = 1; j <= n; ++j) {
    term = jet_mul(term, x);
    cplx inv_j = 1.0 / static_cast<double>(j);
    term = {inv_j * term.a, inv_j * term.b, inv_j * term.c, inv_j * term.d};
    acc = acc + term;
  }
  return acc;
}

double jet_max_abs(const MatrixJet& x, int k) { return x.coefficient(k).max_abs(); }

}  // namespace sl2rep
