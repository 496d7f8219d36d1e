#include "majorana/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "majorana/errors.hpp"
#include "majorana/kinematics.hpp"
#include "majorana/spinors.hpp"
#include "majorana/symmetry.hpp"
#include "majorana/verification.hpp"

namespace majorana {

namespace {

using json = nlohmann::ordered_json;

struct CliConfig {
  std::vector<double> momentum{0.0, 0.0, 0.0};
  double mass = 1.0;
  std::string family = "lambda";
  std::string kind = "S";
  std::string index = "up";
  std::string basis = "spinorial";
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::string format = "text";
  std::string out_path;
  std::optional<int> forced_convention;
  std::vector<std::string> diff_files;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

template <class T>
T lookup(const std::map<std::string, T>& table, const std::string& key, const char* what) {
  const auto it = table.find(key);
  if (it == table.end()) throw UsageError(std::string("unknown ") + what + ": " + key);
  return it->second;
}

Kind parse_kind(const std::string& s) {
  return lookup<Kind>({{"S", Kind::S}, {"A", Kind::A}, {"particle", Kind::Particle}, {"antiparticle", Kind::Antiparticle}},
                      s, "kind");
}

Index parse_index(const std::string& s) { return lookup<Index>({{"up", Index::Up}, {"down", Index::Down}}, s, "index"); }

Basis parse_basis(const std::string& s) {
  return lookup<Basis>({{"spinorial", Basis::Spinorial}, {"helicity", Basis::Helicity}}, s, "basis");
}

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

void write_vector(std::ostream& out, const CVector& v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    char line[96];
    std::snprintf(line, sizeof line, "  [%zu]  %20s  %20s\n", i, fmt(v[i].real()).c_str(), fmt(v[i].imag()).c_str());
    out << line;
  }
}

void write_matrix(std::ostream& out, const CMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << " ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      char cell[96];
      std::snprintf(cell, sizeof cell, "  %-30s", ("(" + fmt(m(r, c).real()) + ", " + fmt(m(r, c).imag()) + ")").c_str());
      out << cell;
    }
    out << "\n";
  }
}

int cmd_eval(const CliConfig& cfg, std::ostream& out) {
  const auto p = make_momentum(cfg.momentum[0], cfg.momentum[1], cfg.momentum[2], cfg.mass);
  std::optional<CVector> vec;
  std::optional<CMatrix> mat;
  std::optional<double> residual;
  const std::string& f = cfg.family;
  if (f == "lambda" || f == "rho") {
    vec = elko_spinor(p, f == "lambda" ? Family::Lambda : Family::Rho, parse_kind(cfg.kind), parse_index(cfg.index),
                      parse_basis(cfg.basis))
              .components();
  } else if (f == "u" || f == "v") {
    vec = dirac_spinor(p, f == "u" ? Kind::Particle : Kind::Antiparticle, parse_index(cfg.index), parse_basis(cfg.basis))
              .components();
  } else if (f == "helicity-operator") {
    mat = helicity_operator(p).matrix();
  } else if (f == "chiral-helicity-operator") {
    mat = chiral_helicity_operator(p).matrix();
  } else if (f == "xi") {
    mat = xi_matrix(p);
    const CMatrix l = boost_half(p, Side::Left);
    const CMatrix r = boost_half(p, Side::Right);
    residual = std::max(intertwiner_residual(*mat, l, conj(l)), intertwiner_residual(*mat, r, conj(r)));
  } else if (f == "u1") {
    mat = u1(p);
  } else {
    throw UsageError("unknown family: " + f);
  }

  if (cfg.format == "json") {
    json j;
    j["object"] = f;
    j["momentum"] = {{"E", p.E()}, {"px", p.px()}, {"py", p.py()}, {"pz", p.pz()}, {"m", p.m()}};
    j["derived"] = {{"p_r", complex_json(p.p_r())},
                    {"p_l", complex_json(p.p_l())},
                    {"p_plus", p.p_plus()},
                    {"p_minus", p.p_minus()}};
    if (vec) {
      json comps = json::array();
      for (const auto& z : vec->entries()) comps.push_back(complex_json(z));
      j["components"] = comps;
    } else {
      json rows = json::array();
      for (std::size_t r = 0; r < mat->rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < mat->cols(); ++c) row.push_back(complex_json((*mat)(r, c)));
        rows.push_back(row);
      }
      j["matrix"] = rows;
    }
    if (residual) j["intertwiner_residual"] = *residual;
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  out << f << " at E=" << fmt(p.E()) << " p=(" << fmt(p.px()) << ", " << fmt(p.py()) << ", " << fmt(p.pz())
      << ") m=" << fmt(p.m()) << "\n";
  out << "p_r = (" << fmt(p.p_r().real()) << ", " << fmt(p.p_r().imag()) << ")  p_l = (" << fmt(p.p_l().real())
      << ", " << fmt(p.p_l().imag()) << ")  p+ = " << fmt(p.p_plus()) << "  p- = " << fmt(p.p_minus()) << "\n";
  if (vec) {
    char head[96];
    std::snprintf(head, sizeof head, "  %3s  %20s  %20s\n", "", "re", "im");
    out << head;
    write_vector(out, *vec);
  } else {
    write_matrix(out, *mat);
  }
  if (residual) out << "intertwiner residual " << fmt(*residual) << "\n";
  return kExitOk;
}

void emit(const CliConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + cfg.out_path);
  file << text;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  SuiteOptions options;
  options.forced_convention = cfg.forced_convention;
  const auto report = run_suite(cfg.suite, cfg.seed, cfg.samples, options);
  emit(cfg, cfg.format == "json" ? report_to_json(report) : report_to_text(report), out);
  out << "verify " << report.suite << ": " << report.summary.passed << "/" << report.summary.total << " passed, "
      << report.summary.failed << " failed\n";
  return report.all_passed() ? kExitOk : kExitFailure;
}

int cmd_table(const CliConfig& cfg, std::ostream& out) {
  if (!(cfg.mass > 0.0)) throw DomainError("mass must be positive");
  const double root = std::sqrt(cfg.mass / 2.0);
  struct Row {
    std::string name;
    CVector unit;
  };
  std::vector<Row> rows;
  for (bool rho : {false, true}) {
    for (Kind k : {Kind::S, Kind::A}) {
      for (Index i : {Index::Up, Index::Down}) {
        const auto b = rho ? rest_rho(k, i, cfg.mass) : rest_lambda(k, i, cfg.mass);
        rows.push_back({std::string(rho ? "rho" : "lambda") + "^" + std::string(to_string(k)) + "_" +
                            std::string(to_string(i)),
                        Complex(1.0 / root) * b.components()});
      }
    }
  }
  if (cfg.format == "json") {
    json j;
    j["mass"] = cfg.mass;
    j["prefactor"] = root;
    json entries = json::object();
    for (const auto& r : rows) {
      json e = json::array();
      for (const auto& z : r.unit.entries()) e.push_back(symbolic_entry(z));
      entries[r.name] = e;
    }
    j["rows"] = entries;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "sqrt(m/2) = " << fmt(root) << "\n";
  for (const auto& r : rows) {
    char name[32];
    std::snprintf(name, sizeof name, "%-14s", r.name.c_str());
    out << name << "(";
    for (std::size_t c = 0; c < r.unit.dim(); ++c) out << (c ? ", " : "") << symbolic_entry(r.unit[c]);
    out << ")\n";
  }
  return kExitOk;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int cmd_diff(const CliConfig& cfg, std::ostream& out) {
  if (cfg.diff_files.size() != 2) throw UsageError("diff needs exactly two report files");
  const auto a = report_from_json(slurp(cfg.diff_files[0]));
  const auto b = report_from_json(slurp(cfg.diff_files[1]));
  const auto drifted = diff_reports(a, b);
  if (cfg.format == "json") {
    out << json(drifted).dump() << "\n";
  } else {
    for (const auto& id : drifted) out << id << "\n";
    out << drifted.size() << " drifted\n";
  }
  return drifted.empty() ? kExitOk : kExitFailure;
}

}  // namespace

std::string symbolic_entry(const Complex& z) {
  if (z == Complex(0.0, 0.0)) return "0";
  if (z == Complex(1.0, 0.0)) return "1";
  if (z == Complex(-1.0, 0.0)) return "-1";
  if (z == Complex(0.0, 1.0)) return "i";
  if (z == Complex(0.0, -1.0)) return "-i";
  return "(" + fmt(z.real()) + ", " + fmt(z.imag()) + ")";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Momentum-space spinor toolkit for self/anti-self charge-conjugate states", "majorana"};
  app.require_subcommand(1);
  CliConfig cfg;
  int forced = 0;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* eval = app.add_subcommand("eval", "evaluate a spinor or operator at one momentum");
  eval->add_option("--momentum", cfg.momentum, "px py pz")->expected(3)->required();
  eval->add_option("--mass", cfg.mass, "rest mass m > 0");
  eval->add_option("--family", cfg.family,
                   "lambda, rho, u, v, helicity-operator, chiral-helicity-operator, xi or u1");
  eval->add_option("--kind", cfg.kind, "S or A (lambda/rho)");
  eval->add_option("--index", cfg.index, "up or down");
  eval->add_option("--basis", cfg.basis, "spinorial or helicity");
  add_format(eval);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", cfg.suite, "all, spin-half, symmetry, dynamics or spin-one");
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--samples", cfg.samples, "number of sampled momenta");
  verify->add_option("--out", cfg.out_path, "write the report here instead of standard output");
  verify->add_option("--force-convention", forced, "evaluate the coupled system with sign +1 or -1");
  add_format(verify);

  auto* table = app.add_subcommand("table", "print the rest-frame lambda/rho spinors");
  table->add_option("--mass", cfg.mass, "rest mass m > 0");
  add_format(table);

  auto* diff = app.add_subcommand("diff", "list checks whose status or constants differ between two JSON reports");
  diff->add_option("reports", cfg.diff_files, "two report files")->expected(2)->required();
  add_format(diff);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (verify->count("--force-convention")) cfg.forced_convention = forced;

  try {
    if (*eval) return cmd_eval(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*table) return cmd_table(cfg, out);
    return cmd_diff(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace majorana
