#include "sl2rep/weeks.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "sl2rep/errors.hpp"

namespace sl2rep {

const Presentation& weeks_presentation() {
  static const Presentation p =
      parse_presentation("a,b | a^2 b^2 a^2 B a B, a^2 b^2 A b A b^2");
  return p;
}

namespace {

cplx sextic(cplx x) {
  // x^6 + 2x^4 - x^3 + 2x^2 + 1, Horner form
  return (((x * x + 2.0) * x - 1.0) * x + 2.0) * x * x + 1.0;
}

cplx sextic_deriv(cplx x) {
  // 6x^5 + 8x^3 - 3x^2 + 4x
  return (((6.0 * x * x + 8.0) * x - 3.0) * x + 4.0) * x;
}

std::array<cplx, 6> compute_roots() {
  // companion matrix of the monic sextic (coefficients 1,0,2,-1,2,0,1)
  Eigen::Matrix<double, 6, 6> companion = Eigen::Matrix<double, 6, 6>::Zero();
  const double coeffs[6] = {1.0, 0.0, 2.0, -1.0, 2.0, 0.0};  // a_0 .. a_5
  for (int i = 1; i < 6; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < 6; ++i) companion(i, 5) = -coeffs[i];
  Eigen::EigenSolver<Eigen::Matrix<double, 6, 6>> es(companion);

  std::array<cplx, 6> roots;
  for (int i = 0; i < 6; ++i) {
    cplx x = es.eigenvalues()(i);
    for (int it = 0; it < 40; ++it) {
      cplx step = sextic(x) / sextic_deriv(x);
      x -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    roots[static_cast<std::size_t>(i)] = x;
  }
  std::sort(roots.begin(), roots.end(), [](cplx u, cplx v) {
    if (u.real() != v.real()) return u.real() < v.real();
    return u.imag() < v.imag();
  });
  return roots;
}

}  // namespace

const std::array<cplx, 6>& weeks_sextic_roots() {
  static const std::array<cplx, 6> roots = compute_roots();
  return roots;
}

Representation weeks_geometric(int root_index) {
  if (root_index < 0 || root_index > 5)
    throw InvalidInputError("weeks_geometric: root index must be in 0..5");
  cplx x = weeks_sextic_roots()[static_cast<std::size_t>(root_index)];
  cplx xi = 1.0 / x;
  cplx r = 2.0 - x - xi;
  std::vector<SL2Element> images = {make_sl2({x, 1.0, 0.0, xi}),
                                    make_sl2({x, 0.0, r, xi})};
  Representation rho = make_representation(weeks_presentation(), std::move(images));
  rho = newton_refine(rho, {.max_iter = 30, .tol = 1e-12});
  if (rho.residual >= 1e-10)
    throw NumericError("weeks_geometric: residual " + std::to_string(rho.residual));
  return rho;
}

}  // namespace sl2rep
