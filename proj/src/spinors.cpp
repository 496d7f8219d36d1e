#include "majorana/spinors.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "majorana/clifford.hpp"
#include "majorana/errors.hpp"

namespace majorana {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Lambda: return "lambda";
    case Family::Rho: return "rho";
    case Family::U: return "u";
    case Family::V: return "v";
  }
  return "?";
}

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::S: return "S";
    case Kind::A: return "A";
    case Kind::Particle: return "particle";
    case Kind::Antiparticle: return "antiparticle";
  }
  return "?";
}

std::string_view to_string(Index i) { return i == Index::Up ? "up" : "down"; }
std::string_view to_string(Basis b) { return b == Basis::Spinorial ? "spinorial" : "helicity"; }

Bispinor::Bispinor(CVector components, Family family, Kind kind, Index index, Basis basis)
    : components_(std::move(components)), family_(family), kind_(kind), index_(index), basis_(basis) {
  if (components_.dim() != 4) throw DimensionError("Bispinor: expected 4 components");
  const bool elko = family == Family::Lambda || family == Family::Rho;
  const bool elko_kind = kind == Kind::S || kind == Kind::A;
  const bool dirac_ok = (family == Family::U && kind == Kind::Particle) ||
                        (family == Family::V && kind == Kind::Antiparticle);
  if (elko ? !elko_kind : !dirac_ok) {
    throw DomainError(std::string("Bispinor: invalid family/kind ") + std::string(to_string(family)) + "/" +
                      std::string(to_string(kind)));
  }
  for (const auto& c : components_.entries())
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw DomainError("Bispinor: non-finite component");
}

namespace {

void require_mass(double m) {
  if (!(m > 0.0)) throw DomainError("mass must be positive, got " + std::to_string(m));
}

void require_elko_kind(Kind k) {
  if (k != Kind::S && k != Kind::A) throw DomainError("lambda/rho kind must be S or A");
}

CVector rest_lambda_unit(Kind kind, Index index) {
  const bool s = kind == Kind::S;
  if (index == Index::Up) return s ? CVector{0.0, kI, 1.0, 0.0} : CVector{0.0, -kI, 1.0, 0.0};
  return s ? CVector{-kI, 0.0, 0.0, 1.0} : CVector{kI, 0.0, 0.0, 1.0};
}

Kind opposite(Kind k) { return k == Kind::S ? Kind::A : Kind::S; }
Index flipped(Index i) { return i == Index::Up ? Index::Down : Index::Up; }

// rho^S_{up,down} = -+ i lambda^A_{down,up};  rho^A_{up,down} = +- i lambda^S_{down,up}
Complex rho_from_lambda_factor(Kind kind, Index index) {
  const double updown = index == Index::Up ? 1.0 : -1.0;
  return kind == Kind::S ? -updown * kI : updown * kI;
}

CMatrix boost_block(const FourMomentum& p) {
  return block_diag(boost_half(p, Side::Right), boost_half(p, Side::Left));
}

}  // namespace

Bispinor rest_lambda(Kind kind, Index index, double m) {
  require_mass(m);
  require_elko_kind(kind);
  return {rest_lambda_unit(kind, index) * Complex(std::sqrt(m / 2.0)), Family::Lambda, kind, index,
          Basis::Spinorial};
}

Bispinor rest_rho(Kind kind, Index index, double m) {
  require_mass(m);
  require_elko_kind(kind);
  const auto source = rest_lambda(opposite(kind), flipped(index), m);
  return {rho_from_lambda_factor(kind, index) * source.components(), Family::Rho, kind, index, Basis::Spinorial};
}

Bispinor lambda_spinor(const FourMomentum& p, Kind kind, Index index) {
  require_elko_kind(kind);
  const double norm = 1.0 / (2.0 * std::sqrt(p.E() + p.m()));
  const Complex pl = p.p_l();
  const Complex pr = p.p_r();
  const double mm = p.p_minus() + p.m();
  const double pp = p.p_plus() + p.m();
  CVector c;
  if (kind == Kind::S) {
    c = index == Index::Up ? CVector{kI * pl, kI * mm, mm, -pr} : CVector{-kI * pp, -kI * pr, -pl, pp};
  } else {
    c = index == Index::Up ? CVector{-kI * pl, -kI * mm, mm, -pr} : CVector{kI * pp, kI * pr, -pl, pp};
  }
  return {c * Complex(norm), Family::Lambda, kind, index, Basis::Spinorial};
}

Bispinor rho_spinor(const FourMomentum& p, Kind kind, Index index) {
  require_elko_kind(kind);
  const double norm = 1.0 / (2.0 * std::sqrt(p.E() + p.m()));
  const Complex pl = p.p_l();
  const Complex pr = p.p_r();
  const double mm = p.p_minus() + p.m();
  const double pp = p.p_plus() + p.m();
  CVector c;
  if (kind == Kind::S) {
    c = index == Index::Up ? CVector{pp, pr, kI * pl, -kI * pp} : CVector{pl, mm, kI * mm, -kI * pr};
  } else {
    c = index == Index::Up ? CVector{pp, pr, -kI * pl, kI * pp} : CVector{pl, mm, -kI * mm, kI * pr};
  }
  return {c * Complex(norm), Family::Rho, kind, index, Basis::Spinorial};
}

TwoSpinor helicity_two_spinor(const AngularParams& a, int h, const PhaseConfig& cfg) {
  if (h != 1 && h != -1) throw DomainError("helicity must be +1 or -1");
  const double c = std::cos(a.theta / 2.0);
  const double s = std::sin(a.theta / 2.0);
  const Complex lo = std::polar(1.0, -a.phi / 2.0);
  const Complex hi = std::polar(1.0, a.phi / 2.0);
  if (h == 1) return {CVector{c * lo, s * hi} * std::polar(1.0, cfg.theta1), 1};
  return {CVector{s * lo, -c * hi} * std::polar(1.0, cfg.theta2), -1};
}

CMatrix helicity_connection(const AngularParams& a, const PhaseConfig& cfg) {
  const CMatrix u(2, 2, {0.0, std::polar(1.0, -a.phi), -std::polar(1.0, a.phi), 0.0});
  return std::polar(1.0, cfg.beta - cfg.alpha) * u;
}

namespace {

CVector rest_lambda_helicity(const AngularParams& a, Kind kind, Index index, const PhaseConfig& cfg, double m) {
  const auto phi = helicity_two_spinor(a, index == Index::Up ? 1 : -1, cfg).components;
  const Complex sign = kind == Kind::S ? kI : -kI;
  return concat(sign * (wigner_theta_half() * conj(phi)), phi) * Complex(std::sqrt(m / 2.0));
}

}  // namespace

Bispinor lambda_helicity(const FourMomentum& p, Kind kind, Index index, const PhaseConfig& cfg) {
  require_elko_kind(kind);
  const CVector rest = rest_lambda_helicity(p.angles(), kind, index, cfg, p.m());
  return {boost_block(p) * rest, Family::Lambda, kind, index, Basis::Helicity};
}

Bispinor rho_helicity(const FourMomentum& p, Kind kind, Index index, const PhaseConfig& cfg) {
  require_elko_kind(kind);
  const CVector source = rest_lambda_helicity(p.angles(), opposite(kind), flipped(index), cfg, p.m());
  const CVector rest = rho_from_lambda_factor(kind, index) * source;
  return {boost_block(p) * rest, Family::Rho, kind, index, Basis::Helicity};
}

Bispinor elko_spinor(const FourMomentum& p, Family family, Kind kind, Index index, Basis basis,
                     const PhaseConfig& cfg) {
  if (family == Family::Lambda)
    return basis == Basis::Spinorial ? lambda_spinor(p, kind, index) : lambda_helicity(p, kind, index, cfg);
  if (family == Family::Rho)
    return basis == Basis::Spinorial ? rho_spinor(p, kind, index) : rho_helicity(p, kind, index, cfg);
  throw DomainError("elko_spinor: family must be lambda or rho");
}

Bispinor dirac_spinor(const FourMomentum& p, Kind kind, Index index, Basis basis, const PhaseConfig& cfg) {
  if (kind != Kind::Particle && kind != Kind::Antiparticle)
    throw DomainError("dirac_spinor: kind must be particle or antiparticle");
  CVector chi;
  if (basis == Basis::Spinorial) {
    chi = index == Index::Up ? CVector{1.0, 0.0} : CVector{0.0, 1.0};
  } else {
    chi = helicity_two_spinor(p.angles(), index == Index::Up ? 1 : -1, cfg).components;
  }
  const double root = std::sqrt(p.m());
  const CVector right = boost_half(p, Side::Right) * chi;
  CVector left = boost_half(p, Side::Left) * chi;
  if (kind == Kind::Antiparticle) left = -left;
  const Family family = kind == Kind::Particle ? Family::U : Family::V;
  return {concat(right, left) * Complex(root), family, kind, index, basis};
}

Complex bar_product(const CVector& a, const CVector& b) { return inner(a, gamma(0) * b); }

Complex bar_product(const Bispinor& a, const Bispinor& b) { return bar_product(a.components(), b.components()); }

// ---------------------------------------------------------------------------
// golden files

void write_golden(std::ostream& out, const std::vector<GoldenRecord>& records) {
  out << kGoldenHeader << '\n';
  out << std::setprecision(17);
  for (const auto& r : records) {
    out << to_string(r.family) << ' ' << to_string(r.kind) << ' ' << to_string(r.index) << ' ' << r.px << ' '
        << r.py << ' ' << r.pz << ' ' << r.m;
    for (const auto& c : r.components.entries()) out << ' ' << c.real() << ' ' << c.imag();
    out << '\n';
  }
}

std::vector<GoldenRecord> read_golden(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kGoldenHeader) throw UsageError("golden file: missing header");
  std::vector<GoldenRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string fam, kind, idx;
    GoldenRecord r{};
    row >> fam >> kind >> idx >> r.px >> r.py >> r.pz >> r.m;
    std::vector<Complex> comps(4);
    for (auto& c : comps) {
      double re = 0.0, im = 0.0;
      row >> re >> im;
      c = {re, im};
    }
    if (!row) throw UsageError("golden file: malformed record: " + line);
    if (fam == "lambda") r.family = Family::Lambda;
    else if (fam == "rho") r.family = Family::Rho;
    else throw UsageError("golden file: unknown family " + fam);
    if (kind == "S") r.kind = Kind::S;
    else if (kind == "A") r.kind = Kind::A;
    else throw UsageError("golden file: unknown kind " + kind);
    if (idx == "up") r.index = Index::Up;
    else if (idx == "down") r.index = Index::Down;
    else throw UsageError("golden file: unknown index " + idx);
    r.components = CVector(std::move(comps));
    records.push_back(std::move(r));
  }
  return records;
}

CVector evaluate_golden(const GoldenRecord& r) {
  const auto p = make_momentum(r.px, r.py, r.pz, r.m);
  return elko_spinor(p, r.family, r.kind, r.index, Basis::Spinorial).components();
}

}  // namespace majorana
