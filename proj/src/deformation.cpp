#include "sl2rep/deformation.hpp"

#include <algorithm>
#include <cmath>

#include "sl2rep/errors.hpp"

namespace sl2rep {

namespace {

double cochain_scale(const std::vector<Cochain>& cochains) {
  double s = 0.0;
  for (const Cochain& c : cochains)
    for (const Sl2Vector& v : c) s = std::max(s, v.norm());
  return std::max(1.0, s);
}

std::vector<MatrixJet> generator_jets(const Representation& base,
                                      const std::vector<Cochain>& cochains, int trunc) {
  const int n = base.presentation.generator_count;
  std::vector<MatrixJet> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    MatrixJet s = MatrixJet::constant(Mat2::zero(), trunc);
    for (int j = 1; j <= static_cast<int>(cochains.size()); ++j) {
      if (j > trunc) break;
      Mat2 cm = cochains[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)].to_matrix();
      s.a.coeff(j) += cm.a;
      s.b.coeff(j) += cm.b;
      s.c.coeff(j) += cm.c;
      s.d.coeff(j) += cm.d;
    }
    out.push_back(jet_mul(exp_jet(s),
                          MatrixJet::constant(base.images[static_cast<std::size_t>(i)].m, trunc)));
  }
  return out;
}

MatrixJet defect_jet(const std::vector<MatrixJet>& gens, const Word& relator, int trunc) {
  MatrixJet acc = MatrixJet::identity(trunc);
  std::vector<std::optional<MatrixJet>> inverses(gens.size());
  for (int l : relator.letters) {
    std::size_t gi = static_cast<std::size_t>(std::abs(l)) - 1;
    if (gi >= gens.size()) throw InvalidInputError("relator_defect_jet: letter out of range");
    if (l > 0) {
      acc = jet_mul(acc, gens[gi]);
    } else {
      if (!inverses[gi]) inverses[gi] = jet_inv(gens[gi]);
      acc = jet_mul(acc, *inverses[gi]);
    }
  }
  return acc - MatrixJet::identity(trunc);
}

}  // namespace

DeformationJet make_deformation_jet(Representation base, std::vector<Cochain> cochains,
                                    double tol) {
  const int n = base.presentation.generator_count;
  for (const Cochain& c : cochains)
    if (static_cast<int>(c.size()) != n)
      throw InvalidInputError("make_deformation_jet: one value per generator required");
  DeformationJet d{std::move(base), std::move(cochains)};
  if (d.order() == 0) return d;

  // first-order condition = cocycle condition
  make_cocycle(d.base, d.cochains.front(), tol);

  const int k = d.order();
  double scale = cochain_scale(d.cochains);
  auto gens = generator_jets(d.base, d.cochains, k);
  for (const Word& r : d.base.presentation.relators) {
    MatrixJet defect = defect_jet(gens, r, k);
    double allowed = tol;
    for (int j = 1; j <= k; ++j) {
      allowed *= std::max(scale, 1.0) * 10.0;
      if (jet_max_abs(defect, j) > allowed + d.base.residual * 10.0)
        throw NumericError("make_deformation_jet: order-" + std::to_string(j) +
                           " relator defect " + std::to_string(jet_max_abs(defect, j)));
    }
  }
  return d;
}

std::vector<MatrixJet> deformed_generator_jets(const DeformationJet& d, int trunc_order) {
  int trunc = trunc_order < 0 ? d.order() + 1 : trunc_order;
  return generator_jets(d.base, d.cochains, trunc);
}

MatrixJet relator_defect_jet(const DeformationJet& d, const Word& relator, int trunc_order) {
  int trunc = trunc_order < 0 ? d.order() + 1 : trunc_order;
  return defect_jet(generator_jets(d.base, d.cochains, trunc), relator, trunc);
}

Eigen::VectorXcd obstruction_vector(const DeformationJet& d, double tol) {
  const int k = d.order();
  const int trunc = k + 1;
  const auto& relators = d.base.presentation.relators;
  Eigen::VectorXcd obs(3 * static_cast<int>(relators.size()));
  auto gens = generator_jets(d.base, d.cochains, trunc);
  double scale = std::pow(cochain_scale(d.cochains), trunc);
  for (int j = 0; j < static_cast<int>(relators.size()); ++j) {
    MatrixJet defect = defect_jet(gens, relators[static_cast<std::size_t>(j)], trunc);
    Mat2 top = defect.coefficient(trunc);
    if (std::abs(top.trace()) > tol * std::max(1.0, scale) * 10.0 + 10.0 * d.base.residual)
      throw NumericError("obstruction_vector: trace part " +
                         std::to_string(std::abs(top.trace())) + " signals an invalid jet");
    Sl2Vector v = traceless_part(top);
    obs(3 * j) = v.h;
    obs(3 * j + 1) = v.e;
    obs(3 * j + 2) = v.f;
  }
  return obs;
}

std::optional<Cochain> extend_deformation(const DeformationJet& d, double jet_tol) {
  const int n = d.base.presentation.generator_count;
  Eigen::VectorXcd obs = obstruction_vector(d, jet_tol);
  if (obs.size() == 0) return Cochain(static_cast<std::size_t>(n), Sl2Vector{});

  // explicit min-norm pseudo-inverse solve with the same floored rank policy
  // as the cohomology ranks (inverting noise would fake solvability)
  Eigen::MatrixXcd k = cocycle_matrix(d.base);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(k, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double cutoff = 1e-10 * std::max(sv.size() ? sv(0) : 0.0, 1.0);
  Eigen::VectorXcd y = svd.matrixU().adjoint() * (-obs);
  for (int i = 0; i < sv.size(); ++i) y(i) = sv(i) > cutoff ? y(i) / sv(i) : cplx{};
  Eigen::VectorXcd x = svd.matrixV() * y;
  double res = (k * x + obs).norm();
  if (res > jet_tol * (1.0 + obs.norm())) return std::nullopt;
  return coords_to_values(x);
}

std::vector<Representation> integrate_curve(const Representation& rho, const Cocycle& c,
                                            double h, int steps, const CurveOptions& opts) {
  if (steps < 1) throw InvalidInputError("integrate_curve: steps must be >= 1");
  for (std::size_t i = 0; i < rho.images.size(); ++i)
    if (distance(c.base.images[i].m, rho.images[i].m) > 1e-9)
      throw InvalidInputError("integrate_curve: cocycle based at a different representation");

  std::vector<Representation> path;
  path.reserve(static_cast<std::size_t>(steps));
  Representation cur = rho;
  const bool zero_direction = c.norm() < 1e-14;
  for (int s = 0; s < steps; ++s) {
    if (zero_direction) {
      path.push_back(cur);
      continue;
    }
    std::vector<SL2Element> predicted;
    predicted.reserve(cur.images.size());
    for (std::size_t i = 0; i < cur.images.size(); ++i)
      predicted.push_back(exp_traceless(h * c.values[i]) * cur.images[i]);
    Representation pred = make_representation(cur.presentation, std::move(predicted));
    try {
      cur = newton_refine(pred, opts.corrector);
    } catch (const ConvergenceError& e) {
      throw ContinuationError(std::string("integrate_curve: corrector stalled (") + e.what() +
                                  ")",
                              s);
    }
    path.push_back(cur);
  }
  return path;
}

}  // namespace sl2rep
