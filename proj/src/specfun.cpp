#include "gkinfo/specfun.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gkinfo::specfun {

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("log_gamma: argument must be positive, got " + std::to_string(x));
  // Shift into the asymptotic regime, then Stirling with Bernoulli terms
  // through B_18; the truncation error at x >= 15 is below 1e-20.
  double shift = 0.0;
  double prod = 1.0;
  while (x < 15.0) {
    prod *= x;
    if (prod > 1e280) {
      shift += std::log(prod);
      prod = 1.0;
    }
    x += 1.0;
  }
  shift += std::log(prod);
  static constexpr std::array<double, 9> c = {
      1.0 / 12.0,          -1.0 / 360.0,        1.0 / 1260.0,
      -1.0 / 1680.0,       1.0 / 1188.0,        -691.0 / 360360.0,
      1.0 / 156.0,         -3617.0 / 122400.0,  43867.0 / 244188.0};
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) series = series * inv2 + *it;
  series *= inv;
  constexpr double half_log_two_pi = 0.91893853320467274178;
  return (x - 0.5) * std::log(x) - x + half_log_two_pi + series - shift;
}

double gen_binomial(double a, int k) {
  if (k < 0) return 0.0;
  double r = 1.0;
  for (int j = 0; j < k; ++j) r *= (a - j) / (j + 1);
  return r;
}

namespace {

void check_alpha(double alpha) {
  if (!(alpha > -1.0)) throw std::domain_error("Laguerre order alpha must exceed -1");
}

}  // namespace

double assoc_laguerre(int n, double alpha, double t) {
  check_alpha(alpha);
  if (n < 0) throw std::domain_error("Laguerre degree must be non-negative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - t;
  for (int k = 1; k < n; ++k) {
    const double next = ((2 * k + 1 + alpha - t) * cur - (k + alpha) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

ScaledValue assoc_laguerre_scaled(int n, double alpha, double t) {
  check_alpha(alpha);
  if (n < 0) throw std::domain_error("Laguerre degree must be non-negative");
  if (n == 0) return {0.0, 1};
  double prev = 1.0;
  double cur = 1.0 + alpha - t;
  double log_scale = 0.0;
  for (int k = 1; k < n; ++k) {
    const double next = ((2 * k + 1 + alpha - t) * cur - (k + alpha) * prev) / (k + 1);
    prev = cur;
    cur = next;
    const double mag = std::max(std::fabs(cur), std::fabs(prev));
    if (mag > 1e150 || (mag < 1e-150 && mag > 0.0)) {
      const int e = std::ilogb(mag);
      prev = std::scalbn(prev, -e);
      cur = std::scalbn(cur, -e);
      log_scale += e * std::numbers::ln2;
    }
  }
  if (cur == 0.0) return {};
  return {std::log(std::fabs(cur)) + log_scale, cur > 0.0 ? 1 : -1};
}

std::vector<double> laguerre_roots(int n, double alpha) {
  check_alpha(alpha);
  if (n < 0) throw std::domain_error("Laguerre degree must be non-negative");
  std::vector<double> roots;
  if (n == 0) return roots;
  if (n == 1) return {1.0 + alpha};

  // All zeros lie below this bound (it exceeds the known estimate
  // 2n + alpha - 2 + sqrt(...) for every n, alpha considered here).
  const double upper = 2.0 * n + alpha + 2.0 + 2.0 * std::sqrt(n * (n + alpha + 1.0)) + 10.0;
  const auto f = [&](double t) { return assoc_laguerre(n, alpha, t); };

  for (int grid = 50 * n; static_cast<int>(roots.size()) != n; grid *= 2) {
    if (grid > 50 * n * 4096) throw std::runtime_error("laguerre_roots: bracketing failed");
    roots.clear();
    double a = 0.0;
    double fa = f(a);
    for (int i = 1; i <= grid; ++i) {
      const double b = upper * i / grid;
      const double fb = f(b);
      if (fb == 0.0) {
        roots.push_back(b);
      } else if ((fa < 0.0) != (fb < 0.0) && fa != 0.0) {
        // Bisection polished by Newton; d/dt L_n^a = -L_{n-1}^{a+1}.
        double lo = a, hi = b, flo = fa;
        double t = 0.5 * (lo + hi);
        for (int it = 0; it < 200; ++it) {
          const double ft = f(t);
          if (ft == 0.0) break;
          if ((ft < 0.0) == (flo < 0.0)) {
            lo = t;
            flo = ft;
          } else {
            hi = t;
          }
          const double d = -assoc_laguerre(n - 1, alpha + 1.0, t);
          double next = d != 0.0 ? t - ft / d : 0.5 * (lo + hi);
          if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
          if (std::fabs(next - t) <= 1e-15 * std::fabs(t)) {
            t = next;
            break;
          }
          t = next;
        }
        roots.push_back(t);
      }
      a = b;
      fa = fb;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

double assoc_legendre(int l, int m, double x) {
  if (l < 0 || m < 0 || m > l) throw std::domain_error("assoc_legendre: need 0 <= m <= l");
  if (!(std::fabs(x) <= 1.0)) throw std::domain_error("assoc_legendre: |x| must be <= 1");
  double pmm = 1.0;
  if (m > 0) {
    const double s = std::sqrt((1.0 - x) * (1.0 + x));
    double fact = 1.0;
    for (int i = 1; i <= m; ++i) {
      pmm *= -fact * s;
      fact += 2.0;
    }
  }
  if (l == m) return pmm;
  double pm1 = x * (2 * m + 1) * pmm;
  if (l == m + 1) return pm1;
  double pll = 0.0;
  for (int k = m + 2; k <= l; ++k) {
    pll = (x * (2 * k - 1) * pm1 - (k + m - 1) * pmm) / (k - m);
    pmm = pm1;
    pm1 = pll;
  }
  return pll;
}

double sph_harm_sq(int l, int m, double theta) {
  const int am = std::abs(m);
  if (l < 0 || am > l) throw std::domain_error("sph_harm_sq: need |m| <= l");
  double ratio = 1.0;  // (l-|m|)! / (l+|m|)!
  for (int k = l - am + 1; k <= l + am; ++k) ratio /= k;
  const double p = assoc_legendre(l, am, std::cos(theta));
  return (2 * l + 1) / (4.0 * std::numbers::pi) * ratio * p * p;
}

std::vector<double> legendre_theta_nodes(int l, int m) {
  const int am = std::abs(m);
  if (l < 0 || am > l) throw std::domain_error("legendre_theta_nodes: need |m| <= l");
  std::vector<double> nodes;
  const int count = l - am;  // zeros of P_l^m strictly inside (-1, 1)
  if (count == 0) return nodes;
  const auto f = [&](double th) { return assoc_legendre(l, am, std::cos(th)); };
  for (int grid = 64 * (l + 1); static_cast<int>(nodes.size()) != count; grid *= 2) {
    if (grid > (1 << 22)) throw std::runtime_error("legendre_theta_nodes: bracketing failed");
    nodes.clear();
    const double pi = std::numbers::pi;
    double a = pi * 1e-9, fa = f(a);
    for (int i = 1; i <= grid; ++i) {
      const double b = i == grid ? pi * (1.0 - 1e-9) : pi * i / grid;
      const double fb = f(b);
      if ((fa < 0.0) != (fb < 0.0) && fa != 0.0 && fb != 0.0) {
        double lo = a, hi = b, flo = fa;
        for (int it = 0; it < 100 && hi - lo > 1e-16; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double fm = f(mid);
          if (fm == 0.0) {
            lo = hi = mid;
            break;
          }
          if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        nodes.push_back(0.5 * (lo + hi));
      } else if (fb == 0.0 && i != grid) {
        nodes.push_back(b);
      }
      a = b;
      fa = fb;
    }
  }
  return nodes;
}

namespace {

// Ascending series x^l/(2l+1)!! * sum_k (-x^2/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1)).
double sph_bessel_series(int l, double x) {
  double lead = 1.0;
  for (int k = 1; k <= l; ++k) lead *= x / (2 * k + 1);
  const double q = -0.5 * x * x;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= q / (k * (2.0 * l + 2.0 * k + 1.0));
    sum += term;
    if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
  }
  return lead * sum;
}

}  // namespace

void sph_bessel_j_all(int l, double x, double* out) {
  if (l < 0) throw std::domain_error("sph_bessel_j: l must be non-negative");
  if (!(x >= 0.0)) throw std::domain_error("sph_bessel_j: x must be non-negative");
  if (x == 0.0) {
    out[0] = 1.0;
    for (int k = 1; k <= l; ++k) out[k] = 0.0;
    return;
  }
  if (x < 1e-3) {
    for (int k = 0; k <= l; ++k) out[k] = sph_bessel_series(k, x);
    return;
  }
  const double s = std::sin(x), c = std::cos(x);
  out[0] = s / x;
  if (l == 0) return;
  if (x > static_cast<double>(l)) {
    out[1] = (s / x - c) / x;
    for (int k = 1; k < l; ++k) out[k + 1] = (2 * k + 1) / x * out[k] - out[k - 1];
    return;
  }
  // Miller's downward recurrence, normalized against whichever of j0, j1 is
  // better conditioned.
  const int start = l + 20 + static_cast<int>(std::sqrt(40.0 * (l + 1)));
  double jp1 = 0.0, jk = 1e-300;
  std::vector<double> tmp(static_cast<std::size_t>(l) + 2, 0.0);
  for (int k = start; k >= 1; --k) {
    const double jm1 = (2 * k + 1) / x * jk - jp1;
    jp1 = jk;
    jk = jm1;
    if (std::fabs(jk) > 1e250) {
      jk *= 1e-250;
      jp1 *= 1e-250;
      for (auto& t : tmp) t *= 1e-250;
    }
    if (k - 1 <= l) tmp[static_cast<std::size_t>(k - 1)] = jk;
    if (k <= l + 1 && k >= 1) tmp[static_cast<std::size_t>(k)] = jp1;
  }
  const double j0 = s / x;
  const double j1 = (s / x - c) / x;
  const double scale = std::fabs(j0) > std::fabs(j1) ? j0 / tmp[0] : j1 / tmp[1];
  for (int k = 0; k <= l; ++k) out[k] = tmp[static_cast<std::size_t>(k)] * scale;
}

double sph_bessel_j(int l, double x) {
  if (l == 0) {
    if (!(x >= 0.0)) throw std::domain_error("sph_bessel_j: x must be non-negative");
    return x == 0.0 ? 1.0 : (x < 1e-3 ? sph_bessel_series(0, x) : std::sin(x) / x);
  }
  double buf[64];
  if (l < 63) {
    sph_bessel_j_all(l, x, buf);
    return buf[l];
  }
  std::vector<double> v(static_cast<std::size_t>(l) + 1);
  sph_bessel_j_all(l, x, v.data());
  return v[static_cast<std::size_t>(l)];
}

}  // namespace gkinfo::specfun
