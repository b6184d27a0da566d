#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "sl2rep/cohomology.hpp"
#include "sl2rep/jet.hpp"
#include "sl2rep/representation.hpp"

namespace sl2rep {

inline constexpr double kJetTol = 1e-8;

// One sl2 value per generator: the order-j coefficient data of a deformation.
using Cochain = std::vector<Sl2Vector>;

// Finite deformation rho_k = exp(sum c_i t^i) rho modulo t^{k+1}. c_1 must be
// a cocycle; relator defects vanish through the stated order.
struct DeformationJet {
  Representation base;
  std::vector<Cochain> cochains;

  int order() const { return static_cast<int>(cochains.size()); }
};

// Validates the first-order cocycle condition and the relator defects through
// order k (each coefficient within tol scaled by the cochain magnitudes).
DeformationJet make_deformation_jet(Representation base, std::vector<Cochain> cochains,
                                    double tol = kJetTol);

// Per generator: exp_jet(sum_j c_j(g_i) t^j) * rho(g_i), truncated at
// trunc_order (defaults to order + 1, enough to expose the next obstruction).
std::vector<MatrixJet> deformed_generator_jets(const DeformationJet& d, int trunc_order = -1);

// Evaluates the relator on the deformed generator jets and subtracts the
// identity jet.
MatrixJet relator_defect_jet(const DeformationJet& d, const Word& relator,
                             int trunc_order = -1);

// Order-(k+1) relator defect coefficients in sl2 coordinates (3m entries).
// Throws NumericError when a defect coefficient has a trace part above tol
// (that flags an invalid input jet, not a genuine obstruction).
Eigen::VectorXcd obstruction_vector(const DeformationJet& d, double tol = kJetTol);

// Minimum-norm least-squares solve of K c_{k+1} = -obstruction. Returns the
// next cochain when the system is solvable within jet_tol * (1 + |obs|),
// otherwise nullopt (the deformation is obstructed).
std::optional<Cochain> extend_deformation(const DeformationJet& d, double jet_tol = kJetTol);

struct CurveOptions {
  NewtonOptions corrector{.max_iter = 25, .tol = 1e-11};
};

// Predictor-corrector continuation along a cocycle direction: predictor
// g_i <- exp(h c(g_i)) g_i, corrector newton_refine. Returns the on-variety
// path (`steps` points); throws ContinuationError with the failing step when
// the corrector stalls.
std::vector<Representation> integrate_curve(const Representation& rho, const Cocycle& c,
                                            double h, int steps,
                                            const CurveOptions& opts = {});

}  // namespace sl2rep
