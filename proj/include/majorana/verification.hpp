#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "majorana/kinematics.hpp"
#include "majorana/matrix.hpp"

namespace majorana {

/// Measured constant attached to a check (phase, convention sign, label, ...).
using Constant = std::variant<long long, double, Complex, std::string>;
using Constants = std::vector<std::pair<std::string, Constant>>;

enum class Expectation { Vanish, ExceedFloor, Classify };

/// What a check body reports back.
struct CheckOutcome {
  double residual = 0.0;  ///< max residual (Vanish) or min margin (ExceedFloor)
  std::size_t sample_count = 0;
  Constants constants;
  bool classified_pass = false;  ///< only read for Expectation::Classify
};

struct SuiteOptions {
  /// Evaluate the coupled system under this sign instead of discovering it.
  std::optional<int> forced_convention;
};

/// Shared inputs of one run.
struct SuiteContext {
  std::uint64_t seed = 1;
  std::size_t samples = 1;
  std::vector<FourMomentum> momenta;
  std::size_t resampled = 0;
  int convention = 1;
  SuiteOptions options;
};

struct CheckSpec {
  std::string id;
  std::string anchor;  ///< the identity being checked, stated in words
  std::string group;   ///< spin-half | symmetry | dynamics | spin-one
  double tolerance = 0.0;
  Expectation expectation = Expectation::Vanish;
  /// rng is seeded from the run seed and the check id.
  std::function<CheckOutcome(const SuiteContext&, std::mt19937_64& rng)> run;
};

/// Every check, in report order. Validated on first use.
const std::vector<CheckSpec>& check_registry();
/// Throws std::logic_error on empty/duplicate ids or anchors, or a non-positive tolerance.
void validate_registry(const std::vector<CheckSpec>& specs);

struct CheckResult {
  std::string id;
  std::string anchor;
  bool pass = false;
  double residual = 0.0;
  std::size_t sample_count = 0;
  Constants constants;

  bool operator==(const CheckResult&) const = default;
};

struct ReportSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;

  bool operator==(const ReportSummary&) const = default;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  int convention = 0;
  std::size_t resampled = 0;
  std::vector<CheckResult> checks;
  ReportSummary summary;

  bool all_passed() const noexcept { return summary.failed == 0; }
  bool operator==(const VerificationReport&) const = default;
};

/// Suite names: all, spin-half, symmetry, dynamics, spin-one.
const std::vector<std::string>& suite_names();

/// Throws UsageError for an unknown suite or samples == 0.
VerificationReport run_suite(const std::string& name, std::uint64_t seed, std::size_t samples,
                             const SuiteOptions& options = {});

/// Ids whose status or constants differ; throws UsageError when the suites differ.
std::vector<std::string> diff_reports(const VerificationReport& a, const VerificationReport& b);

std::string report_to_json(const VerificationReport& r);
/// Throws UsageError on malformed input.
VerificationReport report_from_json(const std::string& text);
std::string report_to_text(const VerificationReport& r);

}  // namespace majorana
