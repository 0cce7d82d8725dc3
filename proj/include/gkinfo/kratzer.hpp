#pragma once

#include <vector>

#include "gkinfo/molparams.hpp"
#include "gkinfo/specfun.hpp"

namespace gkinfo {

/// (n, l, m) with n the radial (vibrational) index.
struct QuantumState {
  int n = 0;
  int l = 0;
  int m = 0;

  static constexpr int max_index = 10;

  /// Throws std::invalid_argument unless 0 <= n, l <= max_index and |m| <= l.
  void validate() const;
  friend bool operator==(const QuantumState&, const QuantumState&) = default;
};

/// Where the radial density lives. Outside [lo, hi] the density is below
/// e^-700 and is treated as zero.
struct RadialDomain {
  double lo = 0.0;
  double hi = 0.0;
  double peak = 0.0;   // maximum of the r^(2 beta+2) e^(-xi r) envelope
  double width = 0.0;  // local length scale at the peak
};

/// An exact bound state of the generalized Kratzer potential. Immutable once
/// built; shareable between threads.
class BoundState {
 public:
  const MoleculeSpec& molecule() const { return molecule_; }
  const PotentialParams& params() const { return params_; }
  const QuantumState& qn() const { return qn_; }
  double beta() const { return beta_; }
  double xi() const { return xi_; }
  double energy() const { return energy_; }
  /// ln N_{n,l}
  double log_norm() const { return log_norm_; }
  /// Laguerre order 2 beta + 1.
  double laguerre_alpha() const { return 2.0 * beta_ + 1.0; }
  /// Radial nodes (Bohr), ascending; exactly n of them.
  const std::vector<double>& nodes() const { return nodes_; }
  const RadialDomain& domain() const { return domain_; }

  /// Mandatory quadrature breakpoints covering [domain.lo, domain.hi]:
  /// the nodes plus a uniform grid of spacing <= domain.width.
  std::vector<double> breakpoints(int max_panels = 600) const;

 private:
  friend BoundState build_state(const MoleculeSpec&, const PotentialParams&, const QuantumState&);
  MoleculeSpec molecule_;
  PotentialParams params_;
  QuantumState qn_;
  double beta_ = 0.0;
  double xi_ = 0.0;
  double energy_ = 0.0;
  double log_norm_ = 0.0;
  std::vector<double> nodes_;
  RadialDomain domain_;
};

/// x/r + y/r^2 + z.
double potential_value(const PotentialParams& params, double r);

/// beta_l = (-1 + sqrt((2l+1)^2 + 8 mu y)) / 2.
double beta_ell(double mu, double y, int l);

/// E_{n,l} = -mu x^2 / (2 (n + beta_l + 1)^2) + z.
double energy(double mu, const PotentialParams& params, int n, int l);

BoundState build_state(const MoleculeSpec& spec, const PotentialParams& params,
                       const QuantumState& qn);

/// psi_{n,l}(r) = N e^{-xi r/2} r^beta L_n^{2 beta+1}(xi r) in the log domain.
specfun::ScaledValue psi_radial(const BoundState& state, double r);

/// d psi / dr in the log domain.
specfun::ScaledValue psi_radial_derivative(const BoundState& state, double r);

/// psi^2, with exact zero once ln(psi^2) < -700.
double radial_density(const BoundState& state, double r);

/// psi^2(r) |Y_{l,m}(theta)|^2.
double density_r(const BoundState& state, double r, double theta);

/// Relative residual of the reduced radial equation for u = r psi at r,
/// using a five-point second difference. Throws within 1e-3/xi of a node.
double schrodinger_residual(const BoundState& state, double r);

}  // namespace gkinfo
