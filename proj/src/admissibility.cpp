#include "sl2rep/admissibility.hpp"

#include <algorithm>
#include <cmath>

#include "sl2rep/errors.hpp"

namespace sl2rep {

DriftReport drift_scan(const Presentation& p, const Representation& rho_ref,
                       const Representation& rho, int max_length, std::size_t budget) {
  if (rho.presentation.generator_count != p.generator_count)
    throw InvalidInputError("drift_scan: representation mismatch");
  auto ball = enumerate_ball(p, rho_ref, max_length, budget);

  DriftReport report;
  report.lengths.resize(static_cast<std::size_t>(max_length));
  report.min_drift.assign(static_cast<std::size_t>(max_length), 0.0);
  report.mean_drift.assign(static_cast<std::size_t>(max_length), 0.0);
  report.element_counts.assign(static_cast<std::size_t>(max_length), 0);
  std::vector<bool> seen(static_cast<std::size_t>(max_length), false);
  for (int l = 0; l < max_length; ++l) report.lengths[static_cast<std::size_t>(l)] = l + 1;

  for (const BallElement& e : ball) {
    if (e.word.empty()) continue;
    std::size_t bin = e.word.length() - 1;
    double drift = cartan_mu(e.image) - cartan_mu(evaluate_word(rho, e.word));
    if (!seen[bin]) {
      report.min_drift[bin] = drift;
      seen[bin] = true;
    } else {
      report.min_drift[bin] = std::min(report.min_drift[bin], drift);
    }
    report.mean_drift[bin] += drift;
    report.element_counts[bin] += 1;
  }
  for (std::size_t bin = 0; bin < report.mean_drift.size(); ++bin)
    if (report.element_counts[bin] > 0)
      report.mean_drift[bin] /= static_cast<double>(report.element_counts[bin]);
  return report;
}

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::AdmissibleCertified: return "AdmissibleCertified";
    case VerdictKind::LikelyAdmissible: return "LikelyAdmissible";
    case VerdictKind::NotAdmissibleCertified: return "NotAdmissibleCertified";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Verdict admissibility_verdict(const Presentation& p, const Representation& rho_ref,
                              const Representation& rho, int max_length,
                              const VerdictOptions& opts) {
  Verdict v;
  if (auto h = invariant_hermitian_form(rho.images, opts.hermitian)) {
    v.kind = VerdictKind::AdmissibleCertified;
    v.rationale =
        "generator images preserve a positive-definite Hermitian form; the image has "
        "compact closure, which suffices for admissibility";
    v.hermitian_certificate = h;
    return v;
  }
  if (auto g = intertwiner_between(rho_ref, rho)) {
    v.kind = VerdictKind::NotAdmissibleCertified;
    v.rationale =
        "conjugate to the reference faithful discrete embedding; the Cartan drift "
        "mu(gamma) - mu(rho(gamma)) stays bounded, so the properness criterion fails";
    v.conjugacy_certificate = g;
    return v;
  }
  DriftReport report = drift_scan(p, rho_ref, rho, max_length, opts.budget);
  bool floor_holds = max_length >= 3;
  for (int l = 3; l <= max_length; ++l) {
    double m = report.min_drift[static_cast<std::size_t>(l - 1)];
    if (report.element_counts[static_cast<std::size_t>(l - 1)] == 0 ||
        m < opts.slope_floor * l) {
      floor_holds = false;
      break;
    }
  }
  if (floor_holds) {
    v.kind = VerdictKind::LikelyAdmissible;
    v.rationale = "minimal Cartan drift grows at least linearly (floor " +
                  std::to_string(opts.slope_floor) + " per unit length over lengths 3.." +
                  std::to_string(max_length) + "); heuristic, not a certificate";
  } else {
    v.kind = VerdictKind::Inconclusive;
    v.rationale =
        "no compactness certificate, no conjugacy to the reference, and the drift floor "
        "was not met at the scanned lengths";
  }
  v.drift = std::move(report);
  return v;
}

}  // namespace sl2rep
