#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "sl2rep/representation.hpp"

namespace sl2rep {

inline constexpr double kCocTol = 1e-8;
inline constexpr double kRankTol = 1e-8;

// Tangent vector to the representation variety at the base point: one sl2
// value per generator, annihilated by the Fox-linearized relator conditions.
struct Cocycle {
  Representation base;
  std::vector<Sl2Vector> values;

  double norm() const;
};

Eigen::VectorXcd cocycle_coords(const std::vector<Sl2Vector>& values);
std::vector<Sl2Vector> coords_to_values(const Eigen::VectorXcd& coords);

// Validates the cocycle defect ||K vec(c)|| <= tol * max(1, ||c||).
Cocycle make_cocycle(Representation base, std::vector<Sl2Vector> values, double tol = kCocTol);

// Value on an arbitrary word via c(uv) = c(u) + Ad(rho(u)) c(v).
Sl2Vector cocycle_on_word(const Cocycle& c, const Word& w);

// Coboundary of X: gamma -> X - Ad(rho(gamma)) X.
Cocycle coboundary_of(const Representation& rho, const Sl2Vector& x);

// 3m x 3n block matrix; block (j,i) = sum of coeff * Ad(rho(word)) over the
// terms of dR_j/dg_i. Its kernel realizes Z^1.
Eigen::MatrixXcd cocycle_matrix(const Representation& rho);

// 3n x 3 stacked blocks I - Ad(rho(g_i)); image = B^1, kernel = centralizer
// Lie algebra.
Eigen::MatrixXcd coboundary_matrix(const Representation& rho);

struct RankDecision {
  int rank = 0;
  std::vector<double> singular_values;
  double gap = 0.0;          // sigma_r / sigma_{r+1}; +inf at full/zero rank
  bool ill_conditioned = false;  // gap below 1e3
};

RankDecision numerical_rank(const Eigen::MatrixXcd& m, double rel_tol = kRankTol);

struct CohomologyReport {
  int dim_Z1 = 0;
  int dim_B1 = 0;
  int dim_H1 = 0;
  int dim_centralizer = 0;
  RankDecision cocycle_rank;
  RankDecision coboundary_rank;
};

// Bundles the rank decisions with orthonormal bases of Z^1, B^1 and the
// orthogonal complement of B^1 inside Z^1 (all fixed at construction, so
// Kodaira-Spencer coordinates are reproducible per workspace).
class CohomologyWorkspace {
 public:
  explicit CohomologyWorkspace(Representation rho, double rank_tol = kRankTol);

  const Representation& base() const { return base_; }
  const CohomologyReport& report() const { return report_; }

  // Coordinates of c against the H^1 basis; zero iff c is a coboundary.
  // Throws when the cocycle was built over a different representation.
  Eigen::VectorXcd kodaira_spencer_class(const Cocycle& c) const;

  // dim_H1 orthonormal cocycles spanning a complement of B^1 in Z^1.
  std::vector<Cocycle> slice_basis() const;

  const Eigen::MatrixXcd& h1_basis() const { return h_basis_; }

 private:
  Representation base_;
  CohomologyReport report_;
  Eigen::MatrixXcd z_basis_;
  Eigen::MatrixXcd b_basis_;
  Eigen::MatrixXcd h_basis_;
};

CohomologyReport cohomology_report(const Representation& rho, double rank_tol = kRankTol);

// dim of the centralizer Lie algebra = dim Aut^0(M_rho) = dim Aut^1(M_rho).
int aut0_dimension(const Representation& rho);

struct PathCocycleOptions {
  double path_tol = 1e-8;     // allowed residual of the +/-h samples
  double coc_tol = kCocTol;
  double defect_scale = 100.0;  // defect allowance: scale*h^2 + coc_tol
};

// Central-difference Weyl cocycle ((rho_+ - rho_-)/2h) rho^-1 per generator,
// projected to the traceless part. Throws when samples are off-variety or the
// cocycle defect exceeds the O(h^2) allowance.
Cocycle path_to_cocycle(const Representation& base, const Representation& plus,
                        const Representation& minus, double h,
                        const PathCocycleOptions& opts = {});

struct LunaCheck {
  bool semisimple = false;
  cplx trace;
  double dist_identity = 0.0;
  double dist_minus_identity = 0.0;
  std::string note;
};

// rho(g_index) diagonalizable: |tr| != 2, or the element is +/-I.
LunaCheck luna_hypothesis_check(const Representation& rho, int generator_index = 1,
                                double tol = 1e-8);

}  // namespace sl2rep
