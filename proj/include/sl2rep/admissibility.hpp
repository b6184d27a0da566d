#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2rep/ball.hpp"

namespace sl2rep {

// Per-length Cartan-drift statistics over the deduplicated group ball.
// drift(w) = mu(g_ref) - mu(rho(w)); lengths run 1..L.
struct DriftReport {
  std::vector<int> lengths;
  std::vector<double> min_drift;
  std::vector<double> mean_drift;
  std::vector<std::size_t> element_counts;
};

DriftReport drift_scan(const Presentation& p, const Representation& rho_ref,
                       const Representation& rho, int max_length,
                       std::size_t budget = kDefaultBallBudget);

enum class VerdictKind {
  AdmissibleCertified,
  LikelyAdmissible,
  NotAdmissibleCertified,
  Inconclusive,
};

const char* to_string(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::string rationale;
  std::optional<Mat2> hermitian_certificate;      // AdmissibleCertified only
  std::optional<SL2Element> conjugacy_certificate; // NotAdmissibleCertified only
  std::optional<DriftReport> drift;               // heuristic branches
};

struct VerdictOptions {
  double slope_floor = 0.1;  // required min_drift(l) >= floor * l for l in 3..L
  std::size_t budget = kDefaultBallBudget;
  HermitianSearchOptions hermitian{};
};

// Decision tree: (1) invariant Hermitian form on the generator images ->
// AdmissibleCertified (compact closure); (2) conjugacy to the reference
// embedding -> NotAdmissibleCertified (drift stays bounded); (3) linear drift
// floor over lengths 3..L -> LikelyAdmissible; (4) Inconclusive with the
// drift report attached.
Verdict admissibility_verdict(const Presentation& p, const Representation& rho_ref,
                              const Representation& rho, int max_length,
                              const VerdictOptions& opts = {});

}  // namespace sl2rep
