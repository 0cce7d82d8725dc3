#include "gkinfo/infomeasures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gkinfo/moments.hpp"
#include "gkinfo/quadrature.hpp"
#include "gkinfo/specfun.hpp"

namespace gkinfo::info {

namespace {

constexpr double kPi = std::numbers::pi;

quad::QuadratureOptions radial_options() {
  quad::QuadratureOptions opt;
  opt.abs_tol = 1e-13;
  opt.rel_tol = 1e-12;
  opt.max_subdivisions = 20000;
  return opt;
}

// int f(r) psi(r)^2 r^2 dr with f given the log-domain psi.
template <class F>
double radial_expectation(const BoundState& s, F&& weight) {
  const auto bp = s.breakpoints();
  const auto integrand = [&](double r) {
    const auto psi = psi_radial(s, r);
    if (psi.is_zero()) return 0.0;
    const double lg = 2.0 * psi.log_magnitude;
    if (lg < -700.0) return 0.0;
    return std::exp(lg + 2.0 * std::log(r)) * weight(r, psi);
  };
  return quad::integrate_panels(integrand, bp, radial_options()).value;
}

double factorial_ratio(int l, int am) {
  double ratio = 1.0;  // (l-|m|)! / (l+|m|)!
  for (int k = l - am + 1; k <= l + am; ++k) ratio /= k;
  return ratio;
}

std::vector<double> theta_breakpoints(int l, int m) {
  std::vector<double> bp{0.0};
  for (double t : specfun::legendre_theta_nodes(l, m)) bp.push_back(t);
  bp.push_back(kPi);
  return bp;
}

}  // namespace

std::string to_string(Method m) { return m == Method::Analytic ? "analytic" : "quadrature"; }

const Complexity& MeasureSet::complexity(double b) const {
  for (const auto& c : complexities)
    if (std::fabs(c.b - b) < 1e-12) return c;
  throw std::out_of_range("MeasureSet has no complexity for the requested b");
}

double fisher_r_analytic(const BoundState& s) {
  const int l = s.qn().l, am = std::abs(s.qn().m);
  const double p2 = moments::expect_p2(s);
  if (am == 0) return 4.0 * p2;
  return 4.0 * p2 - 2.0 * (2 * l + 1) * am * moments::expect_inv_r2(s);
}

FisherValue fisher_p(const BoundState& s, const pspace::MomentumDensity* md) {
  const int l = s.qn().l, am = std::abs(s.qn().m);
  const double r2 = moments::expect_r2(s);
  if (am == 0) return {4.0 * r2, Method::Analytic};
  if (md == nullptr)
    throw std::invalid_argument("fisher_p: momentum density required for m != 0");
  return {4.0 * r2 - 2.0 * (2 * l + 1) * am * pspace::pmoment(*md, -2), Method::Quadrature};
}

double angular_gradient_integral(int l, int m) {
  const int am = std::abs(m);
  if (am > l) throw std::domain_error("angular_gradient_integral: |m| > l");
  const double c2 = (2 * l + 1) / (4.0 * kPi) * factorial_ratio(l, am);
  const auto integrand = [&](double th) {
    const double x = std::cos(th), sn = std::sin(th);
    const double p = specfun::assoc_legendre(l, am, x);
    const double pm1 = (l - 1 >= am) ? specfun::assoc_legendre(l - 1, am, x) : 0.0;
    const double d = (l * x * p - (l + am) * pm1) / sn;
    return c2 * d * d * sn;
  };
  quad::QuadratureOptions opt;
  opt.abs_tol = 1e-14;
  opt.rel_tol = 1e-13;
  return 2.0 * kPi * quad::integrate_panels(integrand, theta_breakpoints(l, m), opt).value;
}

double fisher_r_gradient(const BoundState& s) {
  const auto bp = s.breakpoints();
  const auto integrand = [&](double r) {
    const auto d = psi_radial_derivative(s, r);
    if (d.is_zero()) return 0.0;
    const double lg = 2.0 * d.log_magnitude + 2.0 * std::log(r);
    return lg < -700.0 ? 0.0 : std::exp(lg);
  };
  const double kinetic = quad::integrate_panels(integrand, bp, radial_options()).value;
  const double inv_r2 = radial_expectation(s, [](double r, const auto&) { return 1.0 / (r * r); });
  return 4.0 * kinetic + 4.0 * inv_r2 * angular_gradient_integral(s.qn().l, s.qn().m);
}

double fisher_p_gradient(const BoundState& s, const pspace::MomentumDensity& md) {
  double kinetic = 0.0;
  for (std::size_t i = 0; i < md.p_grid.size(); ++i)
    kinetic += md.weight[i] * md.dxi[i] * md.dxi[i] * md.p_grid[i] * md.p_grid[i];
  return 4.0 * kinetic +
         4.0 * pspace::pmoment(md, -2) * angular_gradient_integral(s.qn().l, s.qn().m);
}

double shannon_angular(int l, int m) {
  if (std::abs(m) > l) throw std::domain_error("shannon_angular: |m| > l");
  const auto integrand = [&](double th) {
    const double y2 = specfun::sph_harm_sq(l, m, th);
    return y2 > 0.0 ? -y2 * std::log(y2) * std::sin(th) : 0.0;
  };
  quad::QuadratureOptions opt;
  opt.abs_tol = 1e-13;
  opt.rel_tol = 1e-13;
  return 2.0 * kPi * quad::integrate_panels(integrand, theta_breakpoints(l, m), opt).value;
}

double shannon_radial(const BoundState& s) {
  return radial_expectation(s, [](double, const specfun::ScaledValue& psi) {
    return -2.0 * psi.log_magnitude;
  });
}

double shannon_r(const BoundState& s) {
  return shannon_radial(s) + shannon_angular(s.qn().l, s.qn().m);
}

double shannon_p(const BoundState& s, const pspace::MomentumDensity& md) {
  double sum = 0.0;
  for (std::size_t i = 0; i < md.p_grid.size(); ++i) {
    const double d = md.density[i];
    if (d > 0.0) sum -= md.weight[i] * d * std::log(d) * md.p_grid[i] * md.p_grid[i];
  }
  return sum + shannon_angular(s.qn().l, s.qn().m);
}

ShannonDecomposition shannon_decomposition(const BoundState& s) {
  ShannonDecomposition d;
  d.S1 = 2.0 * s.log_norm();
  d.S2 = -moments::expect_xi_r(s);
  const double xi = s.xi();
  const double mean_log_t =
      radial_expectation(s, [xi](double r, const auto&) { return std::log(xi * r); });
  d.S3 = 2.0 * s.beta() * (mean_log_t - std::log(xi));
  const int n = s.qn().n;
  const double alpha = s.laguerre_alpha();
  d.S4 = n == 0 ? 0.0 : radial_expectation(s, [&](double r, const auto&) {
    const auto lag = specfun::assoc_laguerre_scaled(n, alpha, xi * r);
    return lag.is_zero() ? 0.0 : 2.0 * lag.log_magnitude;
  });
  d.S5 = -shannon_angular(s.qn().l, s.qn().m);
  return d;
}

double complexity(double I, double S, double b) {
  if (!(I > 0.0)) throw std::domain_error("complexity: I must be positive");
  const double bs = b * S;
  if (std::fabs(bs) > 500.0) return std::exp(std::log(I) + bs);
  return I * std::exp(bs);
}

double fisher_bound(int l, int m, int D) {
  if (std::abs(m) > l) throw std::domain_error("fisher_bound: |m| > l");
  if (D < 3) throw std::domain_error("fisher_bound: D must be at least 3");
  const double L = l + (D - 3) / 2.0;
  const double a = 1.0 - 2.0 * std::abs(m) / (2.0 * L + 1.0);
  return 16.0 * a * a * (L + 1.5) * (L + 1.5);
}

double entropic_bound(int d) { return d * (1.0 + std::log(kPi)); }

std::vector<BoundCheck> check_bounds(const MeasureSet& ms) {
  const int l = ms.qn.l, m = ms.qn.m;
  auto make = [](std::string name, double value, double bound) {
    BoundCheck c{std::move(name), value, bound, value - bound, false};
    c.pass = c.margin >= -kBoundTolerance;
    return c;
  };
  return {make("fisher_product", ms.I_t(), fisher_bound(l, m)),
          make("entropy_sum", ms.S_t(), entropic_bound(3)),
          make("heisenberg_product", ms.r2 * ms.p2, (l + 1.5) * (l + 1.5))};
}

MeasureSet compute_measures(const BoundState& s, const pspace::MomentumDensity& md,
                            const std::vector<double>& b_values) {
  MeasureSet ms;
  ms.molecule = s.molecule().name;
  ms.qn = s.qn();
  ms.I_r = fisher_r_analytic(s);
  ms.I_r_method = Method::Analytic;
  const auto ip = fisher_p(s, &md);
  ms.I_p = ip.value;
  ms.I_p_method = ip.method;
  ms.S_r = shannon_r(s);
  ms.S_p = shannon_p(s, md);
  ms.r2 = moments::expect_r2(s);
  ms.p2 = moments::expect_p2(s);
  for (double b : b_values)
    ms.complexities.push_back({b, complexity(ms.I_r, ms.S_r, b), complexity(ms.I_p, ms.S_p, b)});
  return ms;
}

}  // namespace gkinfo::info
