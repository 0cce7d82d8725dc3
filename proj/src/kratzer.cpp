#include "gkinfo/kratzer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gkinfo {

using specfun::ScaledValue;

namespace {

constexpr double kLogDensityFloor = -700.0;

// ln(psi^2 r^2), -inf at nodes.
double log_radial_weight(const BoundState& s, double r) {
  const auto psi = psi_radial(s, r);
  if (psi.is_zero()) return -std::numeric_limits<double>::infinity();
  return 2.0 * psi.log_magnitude + 2.0 * std::log(r);
}

}  // namespace

void QuantumState::validate() const {
  if (n < 0 || l < 0) throw std::invalid_argument("quantum numbers n, l must be non-negative");
  if (n > max_index || l > max_index)
    throw std::invalid_argument("quantum numbers above " + std::to_string(max_index) +
                                " are outside the validated range");
  if (std::abs(m) > l)
    throw std::invalid_argument("|m| > l in state (" + std::to_string(n) + "," +
                                std::to_string(l) + "," + std::to_string(m) + ")");
}

double potential_value(const PotentialParams& p, double r) {
  if (!(r > 0.0)) throw std::domain_error("potential_value: r must be positive");
  return p.x / r + p.y / (r * r) + p.z;
}

double beta_ell(double mu, double y, int l) {
  const double disc = (2.0 * l + 1.0) * (2.0 * l + 1.0) + 8.0 * mu * y;
  if (disc < 0.0) throw std::domain_error("beta_ell: negative discriminant (unphysical y)");
  return 0.5 * (-1.0 + std::sqrt(disc));
}

double energy(double mu, const PotentialParams& p, int n, int l) {
  const double k = n + beta_ell(mu, p.y, l) + 1.0;
  return -mu * p.x * p.x / (2.0 * k * k) + p.z;
}

BoundState build_state(const MoleculeSpec& spec, const PotentialParams& params,
                       const QuantumState& qn) {
  qn.validate();
  BoundState s;
  s.molecule_ = spec;
  s.params_ = params;
  s.qn_ = qn;
  const int n = qn.n;
  s.beta_ = beta_ell(spec.mu, params.y, qn.l);
  const double k = n + s.beta_ + 1.0;
  s.energy_ = -spec.mu * params.x * params.x / (2.0 * k * k) + params.z;
  // xi = sqrt(-8 mu (E - z)) reduces to 2 mu |x| / k; using the reduced form
  // avoids the cancellation in E - z when z is large.
  s.xi_ = 2.0 * spec.mu * std::fabs(params.x) / k;
  if (!(s.xi_ > 0.0)) throw std::domain_error("build_state: state is not bound (x = 0)");
  const double b = s.beta_;
  s.log_norm_ = 0.5 * ((2.0 * b + 3.0) * std::log(s.xi_) - std::log(2.0) +
                       specfun::log_gamma(n + 1.0) - std::log(k) -
                       specfun::log_gamma(n + 2.0 * b + 2.0));
  for (double t : specfun::laguerre_roots(n, s.laguerre_alpha())) s.nodes_.push_back(t / s.xi_);

  auto& d = s.domain_;
  d.peak = (2.0 * b + 2.0) / s.xi_;
  d.width = d.peak / std::sqrt(2.0 * b + 2.0);
  const double left_start = s.nodes_.empty() ? d.peak : std::min(d.peak, s.nodes_.front());
  const double right_start = s.nodes_.empty() ? d.peak : std::max(d.peak, s.nodes_.back());
  double r = left_start;
  for (;;) {
    r -= d.width;
    if (r <= 0.0) {
      r = 0.0;
      break;
    }
    if (log_radial_weight(s, r) < kLogDensityFloor) break;
  }
  d.lo = r;
  r = right_start;
  do {
    r += d.width;
  } while (log_radial_weight(s, r) >= kLogDensityFloor);
  d.hi = r;
  return s;
}

std::vector<double> BoundState::breakpoints(int max_panels) const {
  const double span = domain_.hi - domain_.lo;
  const int count = std::clamp(static_cast<int>(std::ceil(span / domain_.width)), 1, max_panels);
  std::vector<double> bp;
  bp.reserve(static_cast<std::size_t>(count) + nodes_.size() + 1);
  for (int i = 0; i <= count; ++i) bp.push_back(domain_.lo + span * i / count);
  bp.insert(bp.end(), nodes_.begin(), nodes_.end());
  std::sort(bp.begin(), bp.end());
  const double eps = 1e-9 * domain_.width;
  std::vector<double> out;
  for (double x : bp)
    if (out.empty() || x - out.back() > eps) out.push_back(x);
  return out;
}

ScaledValue psi_radial(const BoundState& s, double r) {
  if (!(r > 0.0)) throw std::domain_error("psi_radial: r must be positive");
  const double t = s.xi() * r;
  const auto lag = specfun::assoc_laguerre_scaled(s.qn().n, s.laguerre_alpha(), t);
  if (lag.is_zero()) return {};
  return {s.log_norm() - 0.5 * t + s.beta() * std::log(r) + lag.log_magnitude, lag.sign};
}

ScaledValue psi_radial_derivative(const BoundState& s, double r) {
  if (!(r > 0.0)) throw std::domain_error("psi_radial_derivative: r must be positive");
  // psi' = N e^{-t/2} r^beta [ (beta/r - xi/2) L_n^a(t) - xi L_{n-1}^{a+1}(t) ]
  const double t = s.xi() * r;
  const int n = s.qn().n;
  const double a = s.laguerre_alpha();
  const auto lag = specfun::assoc_laguerre_scaled(n, a, t);
  const auto dlag = n > 0 ? specfun::assoc_laguerre_scaled(n - 1, a + 1.0, t) : ScaledValue{};
  const double c = s.beta() / r - 0.5 * s.xi();
  // Combine c*L - xi*L' with a common exponent.
  const double ref = std::max(lag.is_zero() ? -1e300 : lag.log_magnitude,
                              dlag.is_zero() ? -1e300 : dlag.log_magnitude);
  const auto rel = [ref](const ScaledValue& v) {
    return v.is_zero() ? 0.0 : v.sign * std::exp(v.log_magnitude - ref);
  };
  const double bracket = c * rel(lag) - s.xi() * rel(dlag);
  if (bracket == 0.0) return {};
  return {s.log_norm() - 0.5 * t + s.beta() * std::log(r) + ref + std::log(std::fabs(bracket)),
          bracket > 0.0 ? 1 : -1};
}

double radial_density(const BoundState& s, double r) {
  const auto psi = psi_radial(s, r);
  if (psi.is_zero()) return 0.0;
  const double lg = 2.0 * psi.log_magnitude;
  return lg < kLogDensityFloor ? 0.0 : std::exp(lg);
}

double density_r(const BoundState& s, double r, double theta) {
  return radial_density(s, r) * specfun::sph_harm_sq(s.qn().l, s.qn().m, theta);
}

double schrodinger_residual(const BoundState& s, double r) {
  if (!(r > 0.0)) throw std::domain_error("schrodinger_residual: r must be positive");
  for (double node : s.nodes())
    if (std::fabs(r - node) <= 1e-3 / s.xi())
      throw std::domain_error("schrodinger_residual: r is within the excluded node neighbourhood");
  const double h = 0.01 * s.domain().width;
  if (r - 2.0 * h <= 0.0) throw std::domain_error("schrodinger_residual: r too close to origin");

  // Ratios u(r + k h) / u(r) assembled from log differences so that the large
  // normalization exponent cancels exactly.
  const int n = s.qn().n;
  const double a = s.laguerre_alpha();
  const auto lag0 = specfun::assoc_laguerre_scaled(n, a, s.xi() * r);
  auto ratio = [&](int k) {
    const double rk = r + k * h;
    const auto lag = specfun::assoc_laguerre_scaled(n, a, s.xi() * rk);
    if (lag.is_zero()) return 0.0;
    const double dlog = -0.5 * s.xi() * k * h + (s.beta() + 1.0) * std::log1p(k * h / r) +
                        (lag.log_magnitude - lag0.log_magnitude);
    return lag.sign * lag0.sign * std::exp(dlog);
  };
  const double upp_over_u =
      (-ratio(2) + 16.0 * ratio(1) - 30.0 + 16.0 * ratio(-1) - ratio(-2)) / (12.0 * h * h);
  const double mu = s.molecule().mu;
  const int l = s.qn().l;
  const double E = s.energy();
  const double lhs = -upp_over_u / (2.0 * mu) + l * (l + 1.0) / (2.0 * mu * r * r) +
                     potential_value(s.params(), r);
  return std::fabs(lhs - E) / std::fabs(E);
}

}  // namespace gkinfo
