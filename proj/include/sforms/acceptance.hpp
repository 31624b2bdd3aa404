#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sforms {

struct AcceptanceOptions {
  std::size_t classifier_samples = 1000;  // per tag, n and field
  std::size_t syzygy_tuples = 100;        // per (r, n) and field
  std::size_t adjugate_samples = 200;     // per field
  std::size_t rank1_samples = 200;        // per field
  std::size_t span_samples = 10000;       // per field
  std::uint64_t seed = 0x5eed2024;

  /// Every count divided by 20 (at least 1).
  static AcceptanceOptions quick();
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

/// Each criterion is independent; classifier samples feed criteria 1 and 8.
CriterionResult check_classifier_and_membership(const AcceptanceOptions& opts,
                                                CriterionResult* membership);
CriterionResult check_syzygy_dimensions(const AcceptanceOptions& opts);
CriterionResult check_orbit_dimensions();
CriterionResult check_stabilizer_dimensions();
CriterionResult check_adjugate_identity(const AcceptanceOptions& opts);
CriterionResult check_rank1_factorization(const AcceptanceOptions& opts);
CriterionResult check_span_bound(const AcceptanceOptions& opts);

/// Runs all eight criteria in order; on_result fires as each one finishes.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opts,
    const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result(const CriterionResult& r);

}  // namespace sforms
