#include "gkinfo/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace gkinfo::moments {

double log_laguerre_moment(int n, double alpha, int shift) {
  if (n < 0) throw std::domain_error("log_laguerre_moment: n must be non-negative");
  if (!(alpha + shift > -1.0))
    throw std::domain_error("log_laguerre_moment: divergent integral (alpha + shift <= -1)");
  std::vector<double> logs;
  for (int i = 0; i <= n; ++i) {
    const double c = specfun::gen_binomial(shift, n - i);
    if (c == 0.0) continue;
    logs.push_back(2.0 * std::log(std::fabs(c)) + specfun::log_gamma(alpha + shift + 1.0 + i) -
                   specfun::log_gamma(i + 1.0));
  }
  const double top = *std::max_element(logs.begin(), logs.end());
  double sum = 0.0;
  for (double v : logs) sum += std::exp(v - top);
  return top + std::log(sum);
}

double laguerre_moment(int n, double alpha, int shift) {
  return std::exp(log_laguerre_moment(n, alpha, shift));
}

double radial_moment(const BoundState& s, int k) {
  if (k < -2 || k > 2) throw std::domain_error("radial_moment: k must be in [-2, 2]");
  // <r^k> = N^2 xi^-(2 beta + 3 + k) int t^(alpha + 1 + k) e^-t L^2 dt, alpha = 2 beta + 1
  const double b = s.beta();
  return std::exp(2.0 * s.log_norm() - (2.0 * b + 3.0 + k) * std::log(s.xi()) +
                  log_laguerre_moment(s.qn().n, s.laguerre_alpha(), 1 + k));
}

double expect_inv_r(const BoundState& s) { return radial_moment(s, -1); }
double expect_inv_r2(const BoundState& s) { return radial_moment(s, -2); }
double expect_r2(const BoundState& s) { return radial_moment(s, 2); }
double expect_xi_r(const BoundState& s) { return s.xi() * radial_moment(s, 1); }

double expect_p2(const BoundState& s) {
  const auto& p = s.params();
  return 2.0 * s.molecule().mu *
         (s.energy() - p.z - p.x * expect_inv_r(s) - p.y * expect_inv_r2(s));
}

}  // namespace gkinfo::moments
