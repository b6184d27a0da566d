#pragma once

#include <vector>

#include "sl2rep/sl2.hpp"

namespace sl2rep {

// Truncated power series in one formal parameter, coefficients for t^0..t^N.
class Jet {
 public:
  Jet() : coeffs_(1, cplx{}) {}
  explicit Jet(int order) : coeffs_(static_cast<std::size_t>(order) + 1, cplx{}) {}
  static Jet constant(cplx value, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  cplx coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  cplx& coeff(int k) { return coeffs_[static_cast<std::size_t>(k)]; }

  friend Jet operator+(const Jet& x, const Jet& y);
  friend Jet operator-(const Jet& x, const Jet& y);
  friend Jet operator*(const Jet& x, const Jet& y);  // Cauchy product, truncated
  friend Jet operator*(cplx s, const Jet& x);

 private:
  std::vector<cplx> coeffs_;
};

// 2x2 matrix with truncated-series entries.
struct MatrixJet {
  Jet a, b, c, d;

  int order() const { return a.order(); }
  Mat2 coefficient(int k) const { return {a.coeff(k), b.coeff(k), c.coeff(k), d.coeff(k)}; }
  Jet det() const { return a * d - b * c; }

  static MatrixJet constant(const Mat2& m, int order);
  static MatrixJet identity(int order) { return constant(Mat2::identity(), order); }

  friend MatrixJet operator+(const MatrixJet& x, const MatrixJet& y);
  friend MatrixJet operator-(const MatrixJet& x, const MatrixJet& y);
};

MatrixJet jet_mul(const MatrixJet& x, const MatrixJet& y);

// Order-by-order inverse; throws on a singular constant term.
MatrixJet jet_inv(const MatrixJet& x);

// exp of a jet with zero constant term (the series terminates at the
// truncation order); throws otherwise.
MatrixJet exp_jet(const MatrixJet& x);

double jet_max_abs(const MatrixJet& x, int k);  // max entry magnitude of coefficient k

}  // namespace sl2rep
