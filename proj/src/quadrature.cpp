#include "gkinfo/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>

namespace gkinfo::quad {

const KronrodRule& kronrod21() {
  static const KronrodRule rule = [] {
    // QUADPACK qk21 abscissae / weights for the positive half.
    constexpr std::array<double, 11> xgk = {
        0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
        0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
        0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
        0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
        0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
        0.000000000000000000000000000000000};
    constexpr std::array<double, 11> wgk = {
        0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
        0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
        0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
        0.123491976262065851077717365082849, 0.134709217311473325928054001771707,
        0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
        0.149445554002916905664936468389821};
    constexpr std::array<double, 5> wg = {
        0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
        0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
        0.295524224714752870173892994651338};
    KronrodRule r{};
    for (int i = 0; i < 10; ++i) {
      r.node[i] = -xgk[i];
      r.node[20 - i] = xgk[i];
      r.kronrod_weight[i] = r.kronrod_weight[20 - i] = wgk[i];
      if (i % 2 == 1) r.gauss_weight[i] = r.gauss_weight[20 - i] = wg[i / 2];
    }
    r.node[10] = 0.0;
    r.kronrod_weight[10] = wgk[10];
    r.gauss_weight[10] = 0.0;
    return r;
  }();
  return rule;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

namespace {

struct Panel {
  double a, b, value, error;
  std::size_t order;  // creation index, used only for deterministic tie breaking
};

struct ByError {
  bool operator()(const Panel& l, const Panel& r) const {
    if (l.error != r.error) return l.error < r.error;
    return l.order > r.order;
  }
};

Panel apply_rule(const Integrand& f, double a, double b, std::size_t order) {
  const auto& k = kronrod21();
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  double kr = 0.0, gs = 0.0;
  for (int i = 0; i < 21; ++i) {
    const double v = f(mid + half * k.node[i]);
    kr += k.kronrod_weight[i] * v;
    gs += k.gauss_weight[i] * v;
  }
  kr *= half;
  gs *= half;
  double err = std::fabs(kr - gs);
  if (!std::isfinite(kr)) err = std::numeric_limits<double>::infinity();
  return {a, b, kr, err, order};
}

QuadratureResult run_adaptive(const Integrand& f, std::span<const double> bp,
                              const QuadratureOptions& opt) {
  std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
  std::size_t order = 0;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    if (!(bp[i] < bp[i + 1]))
      throw std::invalid_argument("quadrature breakpoints must be strictly increasing");
    heap.push(apply_rule(f, bp[i], bp[i + 1], order++));
  }
  auto totals = [&] {
    // Position-ordered summation keeps the result independent of heap order.
    std::vector<Panel> all;
    auto copy = heap;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    QuadratureResult res;
    for (const auto& p : all) {
      res.value += p.value;
      res.abs_error_estimate += p.error;
    }
    res.subdivisions = static_cast<int>(all.size());
    return res;
  };

  double value = 0.0, error = 0.0;
  {
    auto copy = heap;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      copy.pop();
    }
  }
  while (error > std::max(opt.abs_tol, opt.rel_tol * std::fabs(value))) {
    if (static_cast<int>(heap.size()) >= opt.max_subdivisions) {
      auto res = totals();
      throw QuadratureError("quadrature did not converge within " +
                                std::to_string(opt.max_subdivisions) + " panels (error estimate " +
                                std::to_string(res.abs_error_estimate) + ")",
                            res);
    }
    const Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Panel is at floating-point resolution; its error cannot shrink further.
      auto res = totals();
      if (res.abs_error_estimate <= std::max(opt.abs_tol, opt.rel_tol * std::fabs(res.value)) * 10)
        return res;
      throw QuadratureError("quadrature panel reached floating-point resolution", res);
    }
    heap.pop();
    const Panel left = apply_rule(f, worst.a, mid, order++);
    const Panel right = apply_rule(f, mid, worst.b, order++);
    heap.push(left);
    heap.push(right);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    // Drift in the running sums is corrected periodically.
    if (order % 256 == 0) {
      auto res = totals();
      value = res.value;
      error = res.abs_error_estimate;
    }
  }
  return totals();
}

}  // namespace

QuadratureResult integrate_interval(const Integrand& f, double a, double b,
                                    const QuadratureOptions& opt) {
  if (!(a < b)) throw std::invalid_argument("integrate_interval: need a < b");
  const double bp[2] = {a, b};
  return run_adaptive(f, bp, opt);
}

QuadratureResult integrate_interval(const Integrand& f, double a, double b, double tol) {
  QuadratureOptions opt;
  opt.abs_tol = tol;
  opt.rel_tol = 0.0;
  return integrate_interval(f, a, b, opt);
}

QuadratureResult integrate_panels(const Integrand& f, std::span<const double> breakpoints,
                                  const QuadratureOptions& opt) {
  if (breakpoints.size() < 2) throw std::invalid_argument("integrate_panels: need >= 2 points");
  return run_adaptive(f, breakpoints, opt);
}

QuadratureResult integrate_semiinf(const Integrand& f, std::span<const double> splits,
                                   double scale, double tol, double power) {
  if (!(scale > 0.0)) throw std::invalid_argument("integrate_semiinf: scale must be positive");
  std::vector<double> bp{0.0};
  for (double s : splits) {
    if (!(s > bp.back())) throw std::invalid_argument("integrate_semiinf: splits must increase");
    bp.push_back(s);
  }
  QuadratureOptions opt;
  opt.abs_tol = tol;
  opt.rel_tol = 0.0;
  QuadratureResult res;
  if (bp.size() >= 2) res = run_adaptive(f, bp, opt);

  const double width = 4.0 * scale;
  double r = bp.back();
  for (int step = 0;; ++step) {
    if (step > 100000) throw QuadratureError("integrate_semiinf: tail did not decay", res);
    const double end = r + width;
    const auto panel = integrate_interval(f, r, end, opt);
    res.value += panel.value;
    res.abs_error_estimate += panel.abs_error_estimate;
    res.subdivisions += panel.subdivisions;
    r = end;
    // Envelope bound: int_R^inf A t^p e^{-t/s} dt <= g(R) s / (1 - p s / R).
    if (r > 2.0 * power * scale) {
      double g = 0.0;
      for (double frac : {0.5, 0.75, 0.9, 1.0}) g = std::max(g, std::fabs(f(r - width + frac * width)));
      const double tail = g * scale / (1.0 - power * scale / r);
      if (tail < tol / 10.0) break;
    }
  }
  return res;
}

}  // namespace gkinfo::quad
