#include "sl2rep/cohomology.hpp"

#include <cmath>
#include <limits>

#include "sl2rep/errors.hpp"

namespace sl2rep {

double Cocycle::norm() const {
  double s = 0.0;
  for (const Sl2Vector& v : values) s += v.norm_sq();
  return std::sqrt(s);
}

Eigen::VectorXcd cocycle_coords(const std::vector<Sl2Vector>& values) {
  Eigen::VectorXcd v(3 * static_cast<int>(values.size()));
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    const Sl2Vector& x = values[static_cast<std::size_t>(i)];
    v(3 * i) = x.h;
    v(3 * i + 1) = x.e;
    v(3 * i + 2) = x.f;
  }
  return v;
}

std::vector<Sl2Vector> coords_to_values(const Eigen::VectorXcd& coords) {
  std::vector<Sl2Vector> out(static_cast<std::size_t>(coords.size() / 3));
  for (int i = 0; i < static_cast<int>(out.size()); ++i)
    out[static_cast<std::size_t>(i)] = {coords(3 * i), coords(3 * i + 1), coords(3 * i + 2)};
  return out;
}

Eigen::MatrixXcd cocycle_matrix(const Representation& rho) {
  const Presentation& p = rho.presentation;
  const int n = p.generator_count;
  const int m = static_cast<int>(p.relators.size());
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(3 * m, 3 * n);
  for (int j = 0; j < m; ++j) {
    const Word& r = p.relators[static_cast<std::size_t>(j)];
    for (int i = 1; i <= n; ++i) {
      Eigen::Matrix3cd blk = Eigen::Matrix3cd::Zero();
      for (const auto& [coeff, word] : fox_derivative(r, i, n).terms)
        blk += static_cast<double>(coeff) * adjoint_matrix(evaluate_word(rho, word));
      k.block<3, 3>(3 * j, 3 * (i - 1)) = blk;
    }
  }
  return k;
}

Eigen::MatrixXcd coboundary_matrix(const Representation& rho) {
  const int n = rho.presentation.generator_count;
  Eigen::MatrixXcd b(3 * n, 3);
  for (int i = 0; i < n; ++i)
    b.block<3, 3>(3 * i, 0) =
        Eigen::Matrix3cd::Identity() - adjoint_matrix(rho.images[static_cast<std::size_t>(i)]);
  return b;
}

Cocycle make_cocycle(Representation base, std::vector<Sl2Vector> values, double tol) {
  if (static_cast<int>(values.size()) != base.presentation.generator_count)
    throw InvalidInputError("make_cocycle: one value per generator required");
  Eigen::VectorXcd v = cocycle_coords(values);
  double defect = base.presentation.relators.empty()
                      ? 0.0
                      : (cocycle_matrix(base) * v).norm();
  if (defect > tol * std::max(1.0, v.norm()))
    throw NumericError("make_cocycle: cocycle defect " + std::to_string(defect));
  return Cocycle{std::move(base), std::move(values)};
}

Sl2Vector cocycle_on_word(const Cocycle& c, const Word& w) {
  // c(uv) = c(u) + Ad(rho(u)) c(v), unrolled left to right
  Eigen::Vector3cd acc = Eigen::Vector3cd::Zero();
  Word prefix;
  for (int l : w.letters) {
    Eigen::Matrix3cd ad_prefix = adjoint_matrix(evaluate_word(c.base, prefix));
    std::size_t gi = static_cast<std::size_t>(std::abs(l)) - 1;
    Eigen::Vector3cd val{c.values[gi].h, c.values[gi].e, c.values[gi].f};
    if (l > 0) {
      acc += ad_prefix * val;
    } else {
      // c(g^-1) = -Ad(rho(g)^-1) c(g)
      Eigen::Matrix3cd ad_inv = adjoint_matrix(inv(c.base.images[gi]));
      acc -= ad_prefix * (ad_inv * val);
    }
    prefix.letters.push_back(l);
  }
  return {acc(0), acc(1), acc(2)};
}

Cocycle coboundary_of(const Representation& rho, const Sl2Vector& x) {
  Eigen::Vector3cd xv{x.h, x.e, x.f};
  std::vector<Sl2Vector> values;
  values.reserve(rho.images.size());
  for (const SL2Element& g : rho.images) {
    Eigen::Vector3cd v = xv - adjoint_matrix(g) * xv;
    values.push_back({v(0), v(1), v(2)});
  }
  return make_cocycle(rho, std::move(values), 1e-6);
}

RankDecision numerical_rank(const Eigen::MatrixXcd& m, double rel_tol) {
  RankDecision d;
  d.gap = std::numeric_limits<double>::infinity();
  if (m.rows() == 0 || m.cols() == 0) return d;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  for (int i = 0; i < sv.size(); ++i) d.singular_values.push_back(sv(i));
  // spectral-scale floor 1: the operators decided here (I - Ad blocks, unit
  // Fox coefficients) have natural scale >= 1, so an all-tiny spectrum means
  // a numerically zero matrix, not full rank
  double cutoff = rel_tol * std::max(sv(0), 1.0);
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++d.rank;
  if (d.rank > 0 && d.rank < sv.size()) {
    double below = sv(d.rank);
    d.gap = below > 0.0 ? sv(d.rank - 1) / below : std::numeric_limits<double>::infinity();
    d.ill_conditioned = d.gap < 1e3;
  }
  return d;
}

CohomologyWorkspace::CohomologyWorkspace(Representation rho, double rank_tol)
    : base_(std::move(rho)) {
  const int n = base_.presentation.generator_count;
  Eigen::MatrixXcd k = cocycle_matrix(base_);
  Eigen::MatrixXcd cb = coboundary_matrix(base_);

  report_.cocycle_rank = numerical_rank(k, rank_tol);
  report_.coboundary_rank = numerical_rank(cb, rank_tol);
  report_.dim_Z1 = 3 * n - report_.cocycle_rank.rank;
  report_.dim_B1 = report_.coboundary_rank.rank;
  report_.dim_H1 = report_.dim_Z1 - report_.dim_B1;
  report_.dim_centralizer = 3 - report_.dim_B1;
  if (report_.dim_H1 < 0)
    throw NumericError("cohomology: rank decisions violate B1 <= Z1 (is the point on-variety?)");

  // Z^1 basis: kernel of K
  if (k.rows() == 0) {
    z_basis_ = Eigen::MatrixXcd::Identity(3 * n, 3 * n);
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(k, Eigen::ComputeFullV);
    z_basis_ = svd.matrixV().rightCols(report_.dim_Z1);
  }
  // B^1 basis: column space of the coboundary matrix
  if (report_.dim_B1 == 0) {
    b_basis_ = Eigen::MatrixXcd::Zero(3 * n, 0);
    h_basis_ = z_basis_;
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cb, Eigen::ComputeFullU);
    b_basis_ = svd.matrixU().leftCols(report_.dim_B1);
    // complement of B^1 inside Z^1: kernel of (B^H Z)
    Eigen::MatrixXcd overlap = b_basis_.adjoint() * z_basis_;
    Eigen::JacobiSVD<Eigen::MatrixXcd> osvd(overlap, Eigen::ComputeFullV);
    h_basis_ = z_basis_ * osvd.matrixV().rightCols(report_.dim_H1);
  }
}

Eigen::VectorXcd CohomologyWorkspace::kodaira_spencer_class(const Cocycle& c) const {
  if (c.base.presentation != base_.presentation ||
      c.base.images.size() != base_.images.size())
    throw InvalidInputError("kodaira_spencer_class: cocycle base mismatch");
  for (std::size_t i = 0; i < base_.images.size(); ++i)
    if (distance(c.base.images[i].m, base_.images[i].m) >
        1e-12 * std::max(1.0, base_.images[i].m.frobenius()))
      throw InvalidInputError(
          "kodaira_spencer_class: stale basis (cocycle base differs from workspace)");
  return h_basis_.adjoint() * cocycle_coords(c.values);
}

std::vector<Cocycle> CohomologyWorkspace::slice_basis() const {
  std::vector<Cocycle> out;
  for (int k = 0; k < h_basis_.cols(); ++k)
    out.push_back(make_cocycle(base_, coords_to_values(h_basis_.col(k)), 1e-6));
  return out;
}

CohomologyReport cohomology_report(const Representation& rho, double rank_tol) {
  return CohomologyWorkspace(rho, rank_tol).report();
}

int aut0_dimension(const Representation& rho) {
  return 3 - numerical_rank(coboundary_matrix(rho)).rank;
}

Cocycle path_to_cocycle(const Representation& base, const Representation& plus,
                        const Representation& minus, double h,
                        const PathCocycleOptions& opts) {
  if (plus.presentation != base.presentation || minus.presentation != base.presentation)
    throw InvalidInputError("path_to_cocycle: presentations differ");
  if (h <= 0.0) throw InvalidInputError("path_to_cocycle: h must be positive");
  if (plus.residual > opts.path_tol || minus.residual > opts.path_tol)
    throw NumericError("path_to_cocycle: samples off-variety (residuals " +
                       std::to_string(plus.residual) + ", " + std::to_string(minus.residual) +
                       ")");
  std::vector<Sl2Vector> values;
  values.reserve(base.images.size());
  for (std::size_t i = 0; i < base.images.size(); ++i) {
    Mat2 diff = (1.0 / (2.0 * h)) * (plus.images[i].m - minus.images[i].m);
    values.push_back(traceless_part(diff * base.images[i].m.adjugate()));
  }
  Eigen::VectorXcd v = cocycle_coords(values);
  double defect =
      base.presentation.relators.empty() ? 0.0 : (cocycle_matrix(base) * v).norm();
  double allowed = (opts.defect_scale * h * h + opts.coc_tol) * std::max(1.0, v.norm());
  if (defect > allowed)
    throw NumericError("path_to_cocycle: cocycle defect " + std::to_string(defect) +
                       " exceeds tolerance " + std::to_string(allowed));
  return Cocycle{base, std::move(values)};
}

LunaCheck luna_hypothesis_check(const Representation& rho, int generator_index, double tol) {
  if (generator_index < 1 || generator_index > rho.presentation.generator_count)
    throw InvalidInputError("luna_hypothesis_check: generator index out of range");
  const Mat2& g = rho.images[static_cast<std::size_t>(generator_index) - 1].m;
  LunaCheck out;
  out.trace = g.trace();
  out.dist_identity = distance(g, Mat2::identity());
  out.dist_minus_identity = distance(g, (-1.0) * Mat2::identity());
  if (std::abs(out.trace - 2.0) > tol && std::abs(out.trace + 2.0) > tol) {
    out.semisimple = true;
    out.note = "distinct eigenvalues";
  } else if (out.dist_identity <= tol || out.dist_minus_identity <= tol) {
    out.semisimple = true;
    out.note = "central element";
  } else {
    out.semisimple = false;
    out.note = "trace +/-2 but not central: not diagonalizable";
  }
  return out;
}

}  // namespace sl2rep
