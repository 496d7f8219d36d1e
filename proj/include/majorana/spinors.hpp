#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "majorana/kinematics.hpp"
#include "majorana/matrix.hpp"

namespace majorana {

enum class Family { Lambda, Rho, U, V };
enum class Kind { S, A, Particle, Antiparticle };
enum class Index { Up, Down };
enum class Basis { Spinorial, Helicity };

std::string_view to_string(Family f);
std::string_view to_string(Kind k);
std::string_view to_string(Index i);
std::string_view to_string(Basis b);

/// Free phases of the construction; all default to zero.
struct PhaseConfig {
  double theta_c = 0.0;  ///< C = -e^{i theta_c} gamma^2 K
  double theta1 = 0.0;   ///< phase of the positive-helicity 2-spinor
  double theta2 = 0.0;   ///< phase of the negative-helicity 2-spinor
  double alpha = 0.0;    ///< 2-spinor connection phases
  double beta = 0.0;
};

/// Four components tagged with the family they were built as.
class Bispinor {
 public:
  Bispinor(CVector components, Family family, Kind kind, Index index, Basis basis);

  const CVector& components() const noexcept { return components_; }
  Family family() const noexcept { return family_; }
  Kind kind() const noexcept { return kind_; }
  Index index() const noexcept { return index_; }
  Basis basis() const noexcept { return basis_; }

 private:
  CVector components_;
  Family family_;
  Kind kind_;
  Index index_;
  Basis basis_;
};

struct TwoSpinor {
  CVector components;
  int helicity = 1;  ///< +1 or -1
};

Bispinor rest_lambda(Kind kind, Index index, double m);
Bispinor rest_rho(Kind kind, Index index, double m);

/// Closed forms in the spinorial (S_3 eigenstate) basis.
Bispinor lambda_spinor(const FourMomentum& p, Kind kind, Index index);
Bispinor rho_spinor(const FourMomentum& p, Kind kind, Index index);

/// sigma.n eigenstate along the chart direction (theta, phi), eigenvalue h.
TwoSpinor helicity_two_spinor(const AngularParams& a, int h, const PhaseConfig& cfg = {});
/// e^{i(beta - alpha)} [[0, e^{-i phi}], [-e^{i phi}, 0]]: maps the up 2-spinor to the down one.
CMatrix helicity_connection(const AngularParams& a, const PhaseConfig& cfg);

/*!
 * Helicity-basis lambda: sqrt(m/2) diag(L_R, L_L) (+-i Theta phi_h^*, phi_h)
 * with h = + for Up. The direction is taken from the momentum chart, so at
 * rest the spinor still depends on the chart angles.
 */
Bispinor lambda_helicity(const FourMomentum& p, Kind kind, Index index, const PhaseConfig& cfg = {});
/// Helicity-basis rho: the rest-frame map from lambda, then the same boost.
Bispinor rho_helicity(const FourMomentum& p, Kind kind, Index index, const PhaseConfig& cfg = {});

/// Dispatch on basis for the lambda and rho families.
Bispinor elko_spinor(const FourMomentum& p, Family family, Kind kind, Index index, Basis basis,
                     const PhaseConfig& cfg = {});

/// u = sqrt(m)(L_R chi, L_L chi), v = sqrt(m)(L_R chi, -L_L chi). kind is Particle or Antiparticle.
Bispinor dirac_spinor(const FourMomentum& p, Kind kind, Index index, Basis basis, const PhaseConfig& cfg = {});

/// a^dagger gamma^0 b
Complex bar_product(const CVector& a, const CVector& b);
Complex bar_product(const Bispinor& a, const Bispinor& b);

// Golden-value files: one record per spinor, header line first.
inline constexpr std::string_view kGoldenHeader = "# majorana-spinor-golden v1";

struct GoldenRecord {
  Family family;
  Kind kind;
  Index index;
  double px, py, pz, m;
  CVector components;
};

void write_golden(std::ostream& out, const std::vector<GoldenRecord>& records);
/// Throws UsageError on a missing header or malformed record.
std::vector<GoldenRecord> read_golden(std::istream& in);
/// Spinorial-basis lambda/rho for each record's momentum, family, kind and index.
CVector evaluate_golden(const GoldenRecord& r);

}  // namespace majorana
