#include "majorana/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "checks_common.hpp"
#include "majorana/dynamics.hpp"
#include "majorana/errors.hpp"
#include "majorana/sampling.hpp"

namespace majorana {

namespace {

// FNV-1a, so check seeds do not depend on the standard library's std::hash.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::mt19937_64 check_rng(std::uint64_t seed, const std::string& id) {
  const std::uint64_t h = fnv1a(id);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

bool passes(const CheckSpec& spec, const CheckOutcome& o) {
  switch (spec.expectation) {
    case Expectation::Vanish:
      return o.residual <= spec.tolerance;
    case Expectation::ExceedFloor:
      return o.residual > spec.tolerance;
    case Expectation::Classify:
      return o.classified_pass;
  }
  return false;
}

bool close(double a, double b) {
  if (a == b) return true;
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

bool same_constant(const Constant& a, const Constant& b) {
  if (a.index() != b.index()) return false;
  if (const auto* x = std::get_if<double>(&a)) return close(*x, std::get<double>(b));
  if (const auto* x = std::get_if<Complex>(&a)) {
    const Complex y = std::get<Complex>(b);
    return close(x->real(), y.real()) && close(x->imag(), y.imag());
  }
  return a == b;
}

bool same_constants(const Constants& a, const Constants& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first || !same_constant(a[i].second, b[i].second)) return false;
  return true;
}

}  // namespace

void validate_registry(const std::vector<CheckSpec>& specs) {
  std::set<std::string> ids;
  std::set<std::string> anchors;
  for (const auto& s : specs) {
    if (s.id.empty()) throw std::logic_error("check with empty id");
    if (s.anchor.empty()) throw std::logic_error("check " + s.id + " has an empty anchor");
    if (!(s.tolerance > 0.0)) throw std::logic_error("check " + s.id + " has a non-positive tolerance");
    if (!s.run) throw std::logic_error("check " + s.id + " has no body");
    if (!ids.insert(s.id).second) throw std::logic_error("duplicate check id " + s.id);
    if (!anchors.insert(s.anchor).second) throw std::logic_error("duplicate anchor in " + s.id);
  }
}

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> registry = [] {
    std::vector<CheckSpec> specs;
    detail::add_spin_half_checks(specs);
    detail::add_symmetry_checks(specs);
    detail::add_dynamics_checks(specs);
    detail::add_spin_one_checks(specs);
    validate_registry(specs);
    return specs;
  }();
  return registry;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "spin-half", "symmetry", "dynamics", "spin-one"};
  return names;
}

VerificationReport run_suite(const std::string& name, std::uint64_t seed, std::size_t samples,
                             const SuiteOptions& options) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw UsageError("unknown suite: " + name);
  if (samples == 0) throw UsageError("samples must be at least 1");
  if (options.forced_convention && *options.forced_convention != 1 && *options.forced_convention != -1)
    throw UsageError("forced convention must be +1 or -1");

  SuiteContext ctx;
  ctx.seed = seed;
  ctx.samples = samples;
  ctx.options = options;
  MomentumSampler sampler(seed);
  for (std::size_t n = 0; n < samples; ++n) ctx.momenta.push_back(sampler.next());
  ctx.resampled = sampler.resampled();
  if (options.forced_convention) {
    ctx.convention = *options.forced_convention;
  } else {
    const auto d = discover_convention(ctx.momenta);
    ctx.convention = d.working.size() == 1 ? d.working.front() : 0;
  }

  VerificationReport report;
  report.suite = name;
  report.seed = seed;
  report.samples = samples;
  report.convention = ctx.convention;
  report.resampled = ctx.resampled;

  for (const auto& spec : check_registry()) {
    if (name != "all" && spec.group != name) continue;
    auto rng = check_rng(seed, spec.id);
    CheckResult r;
    r.id = spec.id;
    r.anchor = spec.anchor;
    try {
      const CheckOutcome o = spec.run(ctx, rng);
      r.pass = passes(spec, o);
      r.residual = o.residual;
      r.sample_count = o.sample_count;
      r.constants = o.constants;
    } catch (const std::exception& e) {
      r.pass = false;
      r.residual = std::numeric_limits<double>::infinity();
      r.constants.emplace_back("error", std::string(e.what()));
    }
    report.checks.push_back(std::move(r));
  }
  report.summary.total = report.checks.size();
  report.summary.passed = static_cast<std::size_t>(
      std::count_if(report.checks.begin(), report.checks.end(), [](const CheckResult& c) { return c.pass; }));
  report.summary.failed = report.summary.total - report.summary.passed;
  return report;
}

std::vector<std::string> diff_reports(const VerificationReport& a, const VerificationReport& b) {
  if (a.suite != b.suite) throw UsageError("cannot diff reports of suites " + a.suite + " and " + b.suite);
  std::vector<std::string> drifted;
  for (const auto& ca : a.checks) {
    const auto it = std::find_if(b.checks.begin(), b.checks.end(), [&](const CheckResult& c) { return c.id == ca.id; });
    if (it == b.checks.end() || it->pass != ca.pass || !same_constants(ca.constants, it->constants))
      drifted.push_back(ca.id);
  }
  for (const auto& cb : b.checks) {
    const bool known =
        std::any_of(a.checks.begin(), a.checks.end(), [&](const CheckResult& c) { return c.id == cb.id; });
    if (!known) drifted.push_back(cb.id);
  }
  return drifted;
}

}  // namespace majorana
