#pragma once

#include <cmath>
#include <vector>

// Special functions for the Kratzer problem. The Laguerre order here is
// 2*beta+1 with beta ~ 170-210 for real molecules, so anything involving
// Gamma(2*beta+2) must stay in the log domain.

namespace gkinfo::specfun {

/// sign * exp(log_magnitude). sign == 0 is an exact zero.
struct ScaledValue {
  double log_magnitude = 0.0;
  int sign = 0;

  static ScaledValue from(double v) {
    if (v == 0.0) return {0.0, 0};
    return {std::log(std::fabs(v)), v > 0.0 ? 1 : -1};
  }
  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_magnitude); }
  bool is_zero() const { return sign == 0; }

  friend ScaledValue operator*(const ScaledValue& a, const ScaledValue& b) {
    if (a.sign == 0 || b.sign == 0) return {};
    return {a.log_magnitude + b.log_magnitude, a.sign * b.sign};
  }
};

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// a (a-1) ... (a-k+1) / k!
double gen_binomial(double a, int k);

/// L_n^alpha(t) by upward recurrence in n. alpha > -1.
double assoc_laguerre(int n, double alpha, double t);

/// Same value as assoc_laguerre, carried with a running exponent so that large
/// n or alpha cannot overflow.
ScaledValue assoc_laguerre_scaled(int n, double alpha, double t);

/// Sorted zeros of L_n^alpha on (0, inf), refined to ~1e-14 relative.
std::vector<double> laguerre_roots(int n, double alpha);

/// P_l^m(x) including the Condon-Shortley phase (-1)^m.
double assoc_legendre(int l, int m, double x);

/// |Y_{l,m}(theta, phi)|^2, independent of phi.
double sph_harm_sq(int l, int m, double theta);

/// Zeros of P_l^|m|(cos theta) for theta in (0, pi), ascending.
std::vector<double> legendre_theta_nodes(int l, int m);

/// Spherical Bessel function of the first kind j_l(x), x >= 0.
double sph_bessel_j(int l, double x);

/// Fills out[0..l] with j_0(x) ... j_l(x).
void sph_bessel_j_all(int l, double x, double* out);

}  // namespace gkinfo::specfun
