#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "majorana/errors.hpp"
#include "majorana/verification.hpp"

namespace majorana {

namespace {

using json = nlohmann::ordered_json;

// JSON has no infinity; a check that threw reports null.
json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double read_number(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

json encode(const Constant& c) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Complex>) {
          return json::array({number(v.real()), number(v.imag())});
        } else if constexpr (std::is_same_v<T, double>) {
          return number(v);
        } else {
          return json(v);
        }
      },
      c);
}

Constant decode(const json& j) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_number_float() || j.is_null()) return read_number(j);
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array() && j.size() == 2) return Complex(read_number(j[0]), read_number(j[1]));
  throw UsageError("report: unsupported constant " + j.dump());
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string render(const Constant& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Complex>) {
          return "(" + fmt(v.real()) + ", " + fmt(v.imag()) + ")";
        } else if constexpr (std::is_same_v<T, double>) {
          return fmt(v);
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else {
          return v;
        }
      },
      c);
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["convention"] = r.convention;
  j["resampled"] = r.resampled;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json constants = json::object();
    for (const auto& [k, v] : c.constants) constants[k] = encode(v);
    checks.push_back({{"id", c.id},
                      {"anchor", c.anchor},
                      {"status", c.pass ? "pass" : "fail"},
                      {"residual", number(c.residual)},
                      {"sample_count", c.sample_count},
                      {"constants", constants}});
  }
  j["checks"] = checks;
  j["summary"] = {{"total", r.summary.total}, {"passed", r.summary.passed}, {"failed", r.summary.failed}};
  return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.samples = j.at("samples").get<std::size_t>();
    r.convention = j.at("convention").get<int>();
    r.resampled = j.at("resampled").get<std::size_t>();
    for (const auto& c : j.at("checks")) {
      CheckResult cr;
      cr.id = c.at("id").get<std::string>();
      cr.anchor = c.at("anchor").get<std::string>();
      const auto status = c.at("status").get<std::string>();
      if (status != "pass" && status != "fail") throw UsageError("report: bad status " + status);
      cr.pass = status == "pass";
      cr.residual = read_number(c.at("residual"));
      cr.sample_count = c.at("sample_count").get<std::size_t>();
      for (const auto& [k, v] : c.at("constants").items()) cr.constants.emplace_back(k, decode(v));
      r.checks.push_back(std::move(cr));
    }
    const auto& s = j.at("summary");
    r.summary = {s.at("total").get<std::size_t>(), s.at("passed").get<std::size_t>(), s.at("failed").get<std::size_t>()};
    return r;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "suite " << r.suite << "  seed " << r.seed << "  samples " << r.samples << "  convention "
      << (r.convention > 0 ? "+" : "") << r.convention << "  resampled " << r.resampled << "\n";
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS  " : "FAIL  ") << c.id << "  residual " << fmt(c.residual) << "  samples "
        << c.sample_count;
    for (const auto& [k, v] : c.constants) out << "  " << k << "=" << render(v);
    out << "\n";
  }
  out << r.summary.passed << " passed, " << r.summary.failed << " failed, " << r.summary.total << " total\n";
  return out.str();
}

}  // namespace majorana
