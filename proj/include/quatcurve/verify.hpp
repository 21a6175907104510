#pragma once

#include <optional>
#include <string>
#include <vector>

namespace quatcurve {

struct CheckResult {
  std::string id;
  std::string description;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Informational checks are reported but do not affect overall_pass. They
  /// cover closed forms known to disagree with the direct computation.
  bool gated = true;
  std::string grid;
};

/// Which sign of the rho N term rebuilds the evolute from its involute.
struct SignResolution {
  int resolved = 0;  // +1, -1, or 0 when neither or both signs work
  double residual_plus = 0.0;
  double residual_minus = 0.0;
  std::string curve;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::optional<SignResolution> sign;
  /// True iff every gated check passes.
  bool overall_pass = false;
};

struct VerifyOptions {
  /// all, algebra, frenet, involute, evolute or spatial.
  std::string suite = "all";
  /// Replaces every per-check tolerance when set.
  std::optional<double> tol;
  /// Test fixture: negates E (and eta) on the frames fed to the
  /// determinant check.
  bool corrupt_eta = false;
};

/// Throws std::invalid_argument for an unknown suite name.
VerifyReport run_verify(const VerifyOptions& options);

std::string report_text(const VerifyReport& report);
std::string report_json(const VerifyReport& report);

}  // namespace quatcurve
