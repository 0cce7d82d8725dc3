#include "gkinfo/pspace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <queue>
#include <stdexcept>

#include "gkinfo/moments.hpp"
#include "gkinfo/quadrature.hpp"
#include "gkinfo/specfun.hpp"

namespace gkinfo::pspace {

namespace {

const double kSqrtTwoOverPi = std::sqrt(2.0 / std::numbers::pi);

// Interval where ln(psi^2 r^2) > floor; beyond it psi r^2 contributes below
// e^{floor/2} per Bohr to any transform.
std::pair<double, double> trimmed_support(const BoundState& s, double floor) {
  const auto& d = s.domain();
  auto weight = [&](double r) {
    const auto v = psi_radial(s, r);
    return v.is_zero() ? -1e300 : 2.0 * v.log_magnitude + 2.0 * std::log(r);
  };
  const double step = 0.25 * d.width;
  const double left_start = s.nodes().empty() ? d.peak : std::min(d.peak, s.nodes().front());
  const double right_start = s.nodes().empty() ? d.peak : std::max(d.peak, s.nodes().back());
  double lo = left_start;
  while (lo - step > d.lo && weight(lo - step) > floor) lo -= step;
  lo = std::max(d.lo, lo - step);
  double hi = right_start;
  while (hi + step < d.hi && weight(hi + step) > floor) hi += step;
  hi = std::min(d.hi, hi + step);
  return {lo, hi};
}

}  // namespace

double momentum_wavefunction(const BoundState& s, double p, double tol) {
  if (!(p >= 0.0)) throw std::domain_error("momentum_wavefunction: p must be non-negative");
  const int l = s.qn().l;
  if (p == 0.0 && l > 0) return 0.0;
  std::vector<double> bp = s.breakpoints();
  if (p > 0.0) {
    // Half-period split points of j_l(p r): (k + l/2) pi / p.
    const double start = bp.front(), stop = bp.back();
    const double period = std::numbers::pi / p;
    const int kmax = std::min(20000, static_cast<int>(stop / period) + 1);
    for (int k = 1; k <= kmax; ++k) {
      const double r = (k + 0.5 * l) * period;
      if (r > start && r < stop) bp.push_back(r);
    }
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end(),
                         [&](double a, double b) { return b - a < 1e-12 * stop; }),
             bp.end());
  }
  const auto f = [&](double r) {
    const auto psi = psi_radial(s, r);
    if (psi.is_zero()) return 0.0;
    const double lg = psi.log_magnitude + 2.0 * std::log(r);
    if (lg < -745.0) return 0.0;
    return psi.sign * std::exp(lg) * specfun::sph_bessel_j(l, p * r);
  };
  quad::QuadratureOptions opt;
  opt.abs_tol = tol;
  opt.rel_tol = 0.0;
  opt.max_subdivisions = 200000;
  return kSqrtTwoOverPi * quad::integrate_panels(f, bp, opt).value;
}

RadialTransform::RadialTransform(const BoundState& s, double p_limit)
    : l_(s.qn().l), p_limit_(p_limit) {
  const auto [lo, hi] = trimmed_support(s, -90.0);
  const double width = s.domain().width;
  double panel = width;
  if (p_limit > 0.0) panel = std::min(panel, std::numbers::pi / p_limit);
  std::vector<double> bp;
  const int count = std::max(1, static_cast<int>(std::ceil((hi - lo) / panel)));
  for (int i = 0; i <= count; ++i) bp.push_back(lo + (hi - lo) * i / count);
  for (double node : s.nodes())
    if (node > lo && node < hi) bp.push_back(node);
  std::sort(bp.begin(), bp.end());

  std::vector<double> gx, gw;
  quad::gauss_legendre(24, gx, gw);
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    const double a = bp[i], b = bp[i + 1];
    if (b - a < 1e-14 * hi) continue;
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (std::size_t k = 0; k < gx.size(); ++k) {
      const double r = mid + half * gx[k];
      const auto psi = psi_radial(s, r);
      const double lg = psi.log_magnitude + 2.0 * std::log(r);
      const double v = (psi.is_zero() || lg < -745.0) ? 0.0 : psi.sign * std::exp(lg);
      const double w = half * gw[k];
      rule_norm_ += w * (v * v) / (r * r);
      r_.push_back(r);
      weight_.push_back(kSqrtTwoOverPi * w * v);
    }
  }
}

void RadialTransform::evaluate(double p, double& xi, double& dxi) const {
  double buf[64];
  xi = 0.0;
  dxi = 0.0;
  const int l = l_;
  for (std::size_t i = 0; i < r_.size(); ++i) {
    const double r = r_[i];
    const double x = p * r;
    specfun::sph_bessel_j_all(l + 1, x, buf);
    // j_l'(x) = (l/x) j_l - j_{l+1}, with j_0' = -j_1 and j_l'(0) = delta_{l1}/3.
    double dj;
    if (x == 0.0)
      dj = l == 1 ? 1.0 / 3.0 : 0.0;
    else
      dj = (l == 0 ? 0.0 : l / x * buf[l]) - buf[l + 1];
    xi += weight_[i] * buf[l];
    dxi += weight_[i] * r * dj;
  }
}

double RadialTransform::operator()(double p) const {
  double xi, dxi;
  evaluate(p, xi, dxi);
  return xi;
}

namespace {

constexpr int kIntegrands = 5;

struct Sample {
  double p, xi, dxi;
};

struct GridPanel {
  double a = 0.0, b = 0.0;
  std::array<Sample, 21> samples{};
  std::array<double, kIntegrands> kr{}, gs{};
  double score = 0.0;
};

// norm, <p^2>, <p^-2>, entropy integrand, gradient integrand.
std::array<double, kIntegrands> integrands(const Sample& s) {
  const double pi_ = s.xi * s.xi;
  const double p2 = s.p * s.p;
  const double plogp = pi_ > 0.0 ? pi_ * std::log(pi_) : 0.0;
  return {pi_ * p2, pi_ * p2 * p2, pi_, -plogp * p2, s.dxi * s.dxi * p2};
}

GridPanel make_panel(const RadialTransform& tr, double a, double b) {
  const auto& rule = quad::kronrod21();
  GridPanel g;
  g.a = a;
  g.b = b;
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  for (int i = 0; i < 21; ++i) {
    auto& s = g.samples[static_cast<std::size_t>(i)];
    s.p = mid + half * rule.node[static_cast<std::size_t>(i)];
    tr.evaluate(s.p, s.xi, s.dxi);
    const auto v = integrands(s);
    for (int j = 0; j < kIntegrands; ++j) {
      g.kr[j] += half * rule.kronrod_weight[static_cast<std::size_t>(i)] * v[j];
      g.gs[j] += half * rule.gauss_weight[static_cast<std::size_t>(i)] * v[j];
    }
  }
  return g;
}

double find_zero(const RadialTransform& tr, double a, double b, double fa) {
  double lo = a, hi = b, flo = fa;
  double t = 0.5 * (a + b);
  for (int it = 0; it < 100; ++it) {
    double f, df;
    tr.evaluate(t, f, df);
    if (f == 0.0) return t;
    if ((f < 0.0) == (flo < 0.0)) {
      lo = t;
      flo = f;
    } else {
      hi = t;
    }
    double next = df != 0.0 ? t - f / df : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - t) < 1e-14 * std::max(1.0, t) || hi - lo < 1e-14 * std::max(1.0, t))
      return next;
    t = next;
  }
  return t;
}

}  // namespace

MomentumDensity momentum_density_grid(const BoundState& s, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("momentum_density_grid: tol must be positive");
  const double p_scale = std::sqrt(moments::expect_p2(s));
  const auto [lo, hi] = trimmed_support(s, -90.0);
  (void)lo;

  // Extend p_max past 8 sqrt<p^2> until the sampled tail of Pi p^2 and
  // Pi p^4 is negligible. Capped for slowly decaying (Coulomb-like) tails.
  const double cap = 64.0 * p_scale;
  double p_max = 8.0 * p_scale;
  double tail = 0.0;
  {
    RadialTransform probe(s, cap);
    for (;;) {
      const double next = std::min(cap, 1.25 * p_max);
      double band2 = 0.0, band4 = 0.0;
      const int samples = 16;
      for (int i = 0; i <= samples; ++i) {
        const double p = p_max + (next - p_max) * i / samples;
        const double x = probe(p);
        band2 = std::max(band2, x * x * p * p);
        band4 = std::max(band4, x * x * p * p * p * p);
      }
      band2 *= (next - p_max);
      band4 *= (next - p_max);
      tail = band2;
      if ((band2 < 1e-12 && band4 < 1e-12 * p_scale * p_scale) || p_max >= cap) break;
      p_max = next;
    }
  }

  RadialTransform tr(s, p_max);

  // Scan for sign changes of Xi; zeros of Pi are log singularities of the
  // entropy integrand and become mandatory panel boundaries.
  const double step = std::numbers::pi / (8.0 * hi);
  const int scan = std::max(64, static_cast<int>(std::ceil(p_max / step)));
  std::vector<double> bp{0.0};
  std::vector<double> zeros;
  double prev_p = 0.0, prev_f = tr(0.0);
  for (int i = 1; i <= scan; ++i) {
    const double p = p_max * i / scan;
    const double f = tr(p);
    if (prev_f != 0.0 && f != 0.0 && (prev_f < 0.0) != (f < 0.0)) {
      const double z = find_zero(tr, prev_p, p, prev_f);
      zeros.push_back(z);
    }
    prev_p = p;
    prev_f = f;
  }
  // Coarse panel skeleton: zeros plus at most `step`-spaced points.
  std::vector<double> skeleton = zeros;
  for (int i = 1; i < scan; i += 4) skeleton.push_back(p_max * i / scan);
  skeleton.push_back(p_max);
  std::sort(skeleton.begin(), skeleton.end());
  for (double p : skeleton)
    if (p - bp.back() > 1e-12 * p_max) bp.push_back(p);
  if (bp.back() < p_max) bp.push_back(p_max);

  std::vector<GridPanel> panels;
  panels.reserve(bp.size() * 2);
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) panels.push_back(make_panel(tr, bp[i], bp[i + 1]));

  // Refine panels until every integral's Kronrod/Gauss difference is below
  // tol relative to the integral's magnitude.
  auto totals = [&](std::array<double, kIntegrands>& value, std::array<double, kIntegrands>& err) {
    value.fill(0.0);
    err.fill(0.0);
    for (const auto& g : panels)
      for (int j = 0; j < kIntegrands; ++j) {
        value[j] += g.kr[j];
        err[j] += std::fabs(g.kr[j] - g.gs[j]);
      }
  };
  // The entropy integral can sit near zero; measure it against O(1) instead.
  auto floor_of = [](int j) { return j == 3 ? 1e-2 : 1e-300; };
  std::array<double, kIntegrands> value{}, err{};
  double rel_err = 0.0;
  for (int round = 0; round < 60; ++round) {
    totals(value, err);
    rel_err = 0.0;
    for (int j = 0; j < kIntegrands; ++j)
      rel_err = std::max(rel_err, err[j] / std::max(std::fabs(value[j]), floor_of(j)));
    if (rel_err <= tol) break;
    std::vector<GridPanel> next;
    next.reserve(panels.size() * 2);
    for (auto& g : panels) {
      bool split = false;
      for (int j = 0; j < kIntegrands; ++j) {
        const double share = std::fabs(g.kr[j] - g.gs[j]) / std::max(std::fabs(value[j]), floor_of(j));
        if (share > 0.25 * tol * (g.b - g.a) / p_max) split = true;
      }
      const double mid = 0.5 * (g.a + g.b);
      if (split && mid > g.a && mid < g.b) {
        next.push_back(make_panel(tr, g.a, mid));
        next.push_back(make_panel(tr, mid, g.b));
      } else {
        next.push_back(std::move(g));
      }
    }
    if (next.size() == panels.size()) break;
    panels = std::move(next);
    if (panels.size() > 200000) break;
  }

  MomentumDensity md;
  md.p_max = p_max;
  md.zeros = std::move(zeros);
  md.tail_estimate = tail;
  md.error_estimate = rel_err;
  const auto& rule = quad::kronrod21();
  double norm = 0.0;
  for (const auto& g : panels) {
    const double half = 0.5 * (g.b - g.a);
    for (int i = 0; i < 21; ++i) {
      const auto& smp = g.samples[static_cast<std::size_t>(i)];
      const double w = half * rule.kronrod_weight[static_cast<std::size_t>(i)];
      md.p_grid.push_back(smp.p);
      md.weight.push_back(w);
      md.xi.push_back(smp.xi);
      md.dxi.push_back(smp.dxi);
      norm += w * smp.xi * smp.xi * smp.p * smp.p;
    }
  }
  md.raw_norm_defect = std::fabs(norm - 1.0);
  const double scale = 1.0 / std::sqrt(norm);
  md.density.resize(md.xi.size());
  double renorm = 0.0;
  for (std::size_t i = 0; i < md.xi.size(); ++i) {
    md.xi[i] *= scale;
    md.dxi[i] *= scale;
    md.density[i] = md.xi[i] * md.xi[i];
    renorm += md.weight[i] * md.density[i] * md.p_grid[i] * md.p_grid[i];
  }
  md.norm_defect = std::fabs(renorm - 1.0);
  return md;
}

double pmoment(const MomentumDensity& md, int k) {
  if (k != -2 && k != 0 && k != 2) throw std::domain_error("pmoment: k must be -2, 0 or 2");
  double sum = 0.0;
  for (std::size_t i = 0; i < md.p_grid.size(); ++i) {
    const double p = md.p_grid[i];
    sum += md.weight[i] * md.density[i] * std::pow(p, k + 2);
  }
  return sum;
}

void write_density_csv(std::ostream& out, const MomentumDensity& md) {
  out << "p,Pi\n";
  char buf[64];
  for (std::size_t i = 0; i < md.p_grid.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.9g,%.9g\n", md.p_grid[i], md.density[i]);
    out << buf;
  }
}

}  // namespace gkinfo::pspace
