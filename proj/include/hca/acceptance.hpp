#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hca/gauss_linalg.hpp"

namespace hca {

// End-to-end verification battery. Each criterion reports pass/fail/skip with
// a one-line detail; tolerances are pinned next to the checks themselves.
struct CriterionResult {
  int id = 0;
  std::string name;
  std::string status;  // "pass" | "fail" | "skip"
  std::string detail;
  double millis = 0.0;

  bool failed() const { return status == "fail"; }
};

struct SuiteOptions {
  std::uint64_t seed = 0xC0FFEEull;
  // Caps evolution lengths; 0 skips every criterion that must iterate.
  std::size_t max_steps = 10000;
  // Fixture overrides for the two-state reference run (lets a harness inject
  // a corrupted fixture and watch the right criterion fail).
  std::optional<GaussMatrix> fixture_h;
  std::optional<GaussVector> fixture_psi0;
  std::optional<GaussVector> fixture_psi1;
};

std::vector<CriterionResult> run_acceptance(const SuiteOptions& opt);

// One line per criterion: "[PASS] 3. stationary-action ... (12 ms)".
std::string format_result_line(const CriterionResult& r);

}  // namespace hca
