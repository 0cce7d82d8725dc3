#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gkinfo/quadrature.hpp"
#include "gkinfo/specfun.hpp"

using namespace gkinfo::quad;

TEST_CASE("finite intervals") {
  CHECK(integrate_interval([](double) { return 1.0; }, 0.0, 1.0, 1e-12).value ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(integrate_interval([](double x) { return std::log(x); }, 0.0, 1.0, 1e-10).value ==
        doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(integrate_interval([](double t) { return std::sin(t); }, 0.0, std::numbers::pi, 1e-12)
            .value == doctest::Approx(2.0).epsilon(1e-13));
  CHECK_THROWS(integrate_interval([](double x) { return x; }, 1.0, 0.0, 1e-12));
}

TEST_CASE("error estimate and subdivision count") {
  const auto r = integrate_interval([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-10);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(r.subdivisions > 1);
  CHECK(r.abs_error_estimate <= 1e-9);
}

TEST_CASE("subdivision cap throws with the partial result") {
  QuadratureOptions opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = 1e-15;
  opt.max_subdivisions = 5;
  try {
    integrate_interval([](double x) { return std::sin(1.0 / x); }, 1e-4, 1.0, opt);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(e.partial().subdivisions == 5);
  }
}

TEST_CASE("Kronrod rule integrates polynomials exactly") {
  const auto& k = kronrod21();
  double gauss_sum = 0.0, kron_sum = 0.0, x30 = 0.0;
  for (int i = 0; i < 21; ++i) {
    gauss_sum += k.gauss_weight[i];
    kron_sum += k.kronrod_weight[i];
    x30 += k.kronrod_weight[i] * std::pow(k.node[i], 30);
  }
  CHECK(gauss_sum == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(kron_sum == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(x30 == doctest::Approx(2.0 / 31.0).epsilon(1e-14));
}

TEST_CASE("Gauss-Legendre rule") {
  std::vector<double> x, w;
  gauss_legendre(24, x, w);
  REQUIRE(x.size() == 24);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], 46);
  CHECK(s == doctest::Approx(2.0 / 47.0).epsilon(1e-13));
}

TEST_CASE("panels") {
  const std::vector<double> bp{0.0, 0.5, 1.0, 2.0};
  QuadratureOptions opt;
  const auto r = integrate_panels([](double x) { return std::fabs(x - 1.0); }, bp, opt);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("semi-infinite tails") {
  const std::vector<double> none;
  CHECK(integrate_semiinf([](double t) { return std::exp(-t); }, none, 1.0, 1e-13).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate_semiinf([](double t) { return t * t * std::exp(-t); }, none, 1.0, 1e-13).value ==
        doctest::Approx(2.0).epsilon(1e-12));
  // algebraic tail
  CHECK(integrate_semiinf([](double t) { return 1.0 / std::pow(1.0 + t, 6); }, none, 1.0, 1e-10,
                          6.0)
            .value == doctest::Approx(0.2).epsilon(1e-8));
}

TEST_CASE("weighted Laguerre norm") {
  // int t^a e^-t [L_3^a]^2 dt = Gamma(a + 4) / 3!
  const double a = 2.5;
  const std::vector<double> splits{1.0, 3.0, 8.0, 15.0};
  const auto r = integrate_semiinf(
      [&](double t) {
        const double L = gkinfo::specfun::assoc_laguerre(3, a, t);
        return std::pow(t, a) * std::exp(-t) * L * L;
      },
      splits, 2.0, 1e-13);
  const double expected = std::exp(gkinfo::specfun::log_gamma(a + 4.0)) / 6.0;
  CHECK(r.value == doctest::Approx(expected).epsilon(1e-11));
  CHECK(expected == doctest::Approx(47.98087963584072683).epsilon(1e-13));
}
