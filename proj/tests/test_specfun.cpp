#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/legendre.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>

#include "gkinfo/quadrature.hpp"
#include "gkinfo/specfun.hpp"

using namespace gkinfo::specfun;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {

// Explicit series sum_k (-1)^k C(n+a, n-k) t^k / k! in 50-digit arithmetic.
big laguerre_series(int n, big a, big t) {
  big sum = 0;
  for (int k = 0; k <= n; ++k) {
    big c = 1;  // C(n+a, n-k)
    for (int j = 0; j < n - k; ++j) c *= (n + a - j) / big(j + 1);
    big term = c * pow(t, k) / boost::math::factorial<big>(k);
    sum += (k % 2 ? -term : term);
  }
  return sum;
}

}  // namespace

TEST_CASE("log_gamma") {
  CHECK(std::fabs(log_gamma(1.0)) < 1e-14);
  CHECK(std::fabs(log_gamma(2.0)) < 1e-14);
  CHECK(log_gamma(0.5) == doctest::Approx(0.5723649429247001).epsilon(1e-14));
  CHECK(log_gamma(343.2) == doctest::Approx(1658.509172427130502836).epsilon(1e-15));
  CHECK(log_gamma(343.2) ==
        doctest::Approx(boost::math::lgamma(big("343.2")).convert_to<double>()).epsilon(1e-15));
  for (double x : {0.1, 0.9, 3.3, 14.9, 15.1, 77.7, 1000.25})
    CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("generalized binomial") {
  CHECK(gen_binomial(-1.0, 3) == -1.0);
  CHECK(gen_binomial(3.0, 2) == 3.0);
  CHECK(gen_binomial(2.0, 5) == 0.0);
  CHECK(gen_binomial(0.5, 2) == doctest::Approx(-0.125));
  CHECK(gen_binomial(7.3, 0) == 1.0);
}

TEST_CASE("associated Laguerre") {
  CHECK(assoc_laguerre(0, 342.2, 123.0) == 1.0);
  CHECK(assoc_laguerre(1, 2.5, 0.7) == doctest::Approx(1.0 + 2.5 - 0.7));
  CHECK(assoc_laguerre(5, 342.2, 300.0) == doctest::Approx(-274206.06566399999).epsilon(1e-12));
  for (int n : {2, 5, 8})
    for (double t : {1.0, 50.0, 340.0}) {
      const double oracle = laguerre_series(n, big("342.2"), big(t)).convert_to<double>();
      CHECK(assoc_laguerre(n, 342.2, t) == doctest::Approx(oracle).epsilon(1e-11));
      const auto sv = assoc_laguerre_scaled(n, 342.2, t);
      CHECK(sv.value() == doctest::Approx(oracle).epsilon(1e-11));
    }
}

TEST_CASE("scaled Laguerre does not overflow") {
  const auto v = assoc_laguerre_scaled(10, 420.0, 1e3);
  CHECK(v.sign != 0);
  const double oracle = log(abs(laguerre_series(10, big(420), big(1000)))).convert_to<double>();
  CHECK(v.log_magnitude == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("Laguerre roots") {
  CHECK(laguerre_roots(0, 3.0).empty());
  const auto r1 = laguerre_roots(1, 4.5);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == doctest::Approx(5.5));
  const auto r2 = laguerre_roots(2, 0.0);
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-13));
  CHECK(r2[1] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-13));
  for (int n = 1; n <= 10; ++n) {
    const auto r = laguerre_roots(n, 342.2);
    REQUIRE(r.size() == static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) CHECK(r[i] > r[i - 1]);
      const double scale = std::fabs(assoc_laguerre(n - 1, 343.2, r[i])) * r[i];
      CHECK(std::fabs(assoc_laguerre(n, 342.2, r[i])) < 1e-10 * scale);
    }
  }
}

TEST_CASE("associated Legendre with Condon-Shortley phase") {
  CHECK(assoc_legendre(0, 0, 0.37) == 1.0);
  CHECK(assoc_legendre(1, 1, 0.0) == doctest::Approx(-1.0));
  CHECK(assoc_legendre(5, 3, 0.3) == doctest::Approx(8.659144616061969894).epsilon(1e-14));
  for (int l = 0; l <= 10; ++l)
    for (int m = 0; m <= l; ++m)
      for (double x : {-0.9, -0.2, 0.45, 0.99})
        CHECK(assoc_legendre(l, m, x) ==
              doctest::Approx(boost::math::legendre_p(l, m, x)).epsilon(1e-12).scale(1.0));
  CHECK_THROWS(assoc_legendre(3, -2, 0.3));
  CHECK_THROWS(assoc_legendre(2, 3, 0.3));
  CHECK_THROWS(assoc_legendre(2, 1, 1.5));
}

TEST_CASE("squared spherical harmonics") {
  const double pi = std::numbers::pi;
  CHECK(sph_harm_sq(0, 0, 1.234) == doctest::Approx(1.0 / (4.0 * pi)));
  CHECK(sph_harm_sq(1, 0, pi / 2) == doctest::Approx(0.0).scale(1.0));
  CHECK(sph_harm_sq(1, 1, 0.3) == doctest::Approx(sph_harm_sq(1, -1, 0.3)));
  for (auto [l, m] : {std::pair{5, 3}, std::pair{5, 0}, std::pair{10, 7}, std::pair{2, -1}}) {
    const auto norm = gkinfo::quad::integrate_interval(
        [&](double t) { return 2.0 * pi * sph_harm_sq(l, m, t) * std::sin(t); }, 0.0, pi, 1e-13);
    CHECK(norm.value == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("Legendre angular nodes") {
  CHECK(legendre_theta_nodes(0, 0).empty());
  const auto n10 = legendre_theta_nodes(1, 0);
  REQUIRE(n10.size() == 1);
  CHECK(n10[0] == doctest::Approx(std::numbers::pi / 2));
  const auto n53 = legendre_theta_nodes(5, 3);
  CHECK(n53.size() == 2);
  for (double t : n53) CHECK(std::fabs(assoc_legendre(5, 3, std::cos(t))) < 1e-12);
}

TEST_CASE("spherical Bessel") {
  CHECK(sph_bessel_j(0, 0.0) == 1.0);
  CHECK(sph_bessel_j(0, 2.5) == doctest::Approx(std::sin(2.5) / 2.5));
  CHECK(sph_bessel_j(1, 0.0) == 0.0);
  CHECK(sph_bessel_j(1, 1e-6) == doctest::Approx(1e-6 / 3.0).epsilon(1e-10));
  CHECK(sph_bessel_j(5, 7.2) == doctest::Approx(0.16792718699840907275).epsilon(1e-14));
  for (int l = 0; l <= 11; ++l)
    for (double x : {1e-4, 0.05, 0.9, 3.0, 7.2, 11.0, 40.0, 512.5}) {
      const double oracle = boost::math::sph_bessel(l, x);
      CHECK(sph_bessel_j(l, x) ==
            doctest::Approx(oracle).epsilon(1e-12).scale(1e-12 * std::fabs(oracle) + 1e-300));
    }
  double all[8];
  sph_bessel_j_all(7, 3.3, all);
  for (int l = 0; l <= 7; ++l)
    CHECK(all[l] == doctest::Approx(boost::math::sph_bessel(l, 3.3)).epsilon(1e-12));
}

TEST_CASE("scaled value arithmetic") {
  const auto a = ScaledValue::from(-2.0);
  const auto b = ScaledValue::from(3.0);
  CHECK((a * b).value() == doctest::Approx(-6.0));
  CHECK(ScaledValue::from(0.0).is_zero());
  CHECK((a * ScaledValue::from(0.0)).is_zero());
}
