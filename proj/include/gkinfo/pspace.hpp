#pragma once

#include <ostream>
#include <vector>

#include "gkinfo/kratzer.hpp"

namespace gkinfo::pspace {

/// Xi_{n,l}(p) = sqrt(2/pi) int_0^inf psi(r) j_l(p r) r^2 dr, computed by
/// adaptive quadrature with panels split at the radial nodes and at the
/// half-period points of j_l(p r). The phase i^-l is dropped.
double momentum_wavefunction(const BoundState& state, double p, double tol = 1e-13);

/// The same transform evaluated with a fixed composite Gauss-Legendre rule
/// built once per state. Panels are narrow enough to resolve j_l(p r) for
/// every p <= p_limit; cheap to call many times.
class RadialTransform {
 public:
  RadialTransform(const BoundState& state, double p_limit);
  double p_limit() const { return p_limit_; }
  /// Xi(p) and dXi/dp.
  void evaluate(double p, double& xi, double& dxi) const;
  double operator()(double p) const;
  std::size_t rule_size() const { return r_.size(); }
  /// Normalization of psi under the stored rule (should be 1).
  double rule_norm() const { return rule_norm_; }

 private:
  int l_;
  double p_limit_;
  double rule_norm_ = 0.0;
  std::vector<double> r_;
  std::vector<double> weight_;  // sqrt(2/pi) w_i psi(r_i) r_i^2
};

/// Normalized radial momentum density tabulated on an adaptive Gauss-Kronrod
/// partition of [0, p_max]. Quadratures over the grid use `weight`.
struct MomentumDensity {
  std::vector<double> p_grid;
  std::vector<double> weight;
  std::vector<double> density;  // Pi(p) = Xi(p)^2, normalized
  std::vector<double> xi;       // signed Xi(p), normalized
  std::vector<double> dxi;      // dXi/dp, normalized
  std::vector<double> zeros;    // located sign changes of Xi
  double p_max = 0.0;
  double raw_norm_defect = 0.0;  // |int Pi p^2 dp - 1| before renormalization
  double norm_defect = 0.0;      // same, after
  double tail_estimate = 0.0;    // mass estimate beyond p_max
  double error_estimate = 0.0;   // relative Kronrod-Gauss error of the grid integrals
};

/// Builds the grid. The partition is refined until the Kronrod/Gauss
/// difference of the norm, <p^2>, <p^-2>, the entropy integral and the
/// gradient integral are all below `tol` relative.
MomentumDensity momentum_density_grid(const BoundState& state, double tol = 1e-9);

/// int Pi(p) p^(k+2) dp over the stored grid, k in {-2, 0, 2}.
double pmoment(const MomentumDensity& md, int k);

/// Writes "p,Pi" rows for plotting.
void write_density_csv(std::ostream& out, const MomentumDensity& md);

}  // namespace gkinfo::pspace
