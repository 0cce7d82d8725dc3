#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gkinfo/infomeasures.hpp"
#include "gkinfo/moments.hpp"
#include "support.hpp"

using namespace gkinfo;
using namespace gkinfo::info;
using testsupport::hydrogen;
using testsupport::mie_state;

namespace {
const double pi = std::numbers::pi;
}

TEST_CASE("angular entropy closed forms") {
  CHECK(shannon_angular(0, 0) == doctest::Approx(std::log(4 * pi)).epsilon(1e-12));
  // |Y10|^2 = 3 cos^2 / 4 pi
  CHECK(shannon_angular(1, 0) == doctest::Approx(std::log(4 * pi / 3) + 2.0 / 3).epsilon(1e-11));
  // |Y11|^2 = 3 sin^2 / 8 pi
  CHECK(shannon_angular(1, 1) == doctest::Approx(std::log(2 * pi / 3) + 5.0 / 3).epsilon(1e-11));
  CHECK(shannon_angular(1, -1) == doctest::Approx(shannon_angular(1, 1)).epsilon(1e-13));
}

TEST_CASE("angular gradient integral") {
  for (int l = 0; l <= 6; ++l)
    for (int m = -l; m <= l; ++m)
      CHECK(angular_gradient_integral(l, m) ==
            doctest::Approx(l * (l + 1.0) - std::abs(m) * (2.0 * l + 1.0) / 2.0)
                .epsilon(1e-10)
                .scale(1.0));
}

TEST_CASE("bounds") {
  CHECK(fisher_bound(0, 0) == doctest::Approx(36.0));
  CHECK(fisher_bound(3, 0) == doctest::Approx(324.0));
  CHECK(fisher_bound(5, 0) == doctest::Approx(676.0));
  CHECK(fisher_bound(5, 1) == doctest::Approx(54756.0 / 121));
  CHECK(fisher_bound(5, 5) == doctest::Approx(676.0 / 121));
  CHECK(entropic_bound(3) == doctest::Approx(3 * (1 + std::log(pi))));
  // tabulated as 6.43418 (truncated)
  CHECK(std::floor(entropic_bound(3) * 1e5) / 1e5 == doctest::Approx(6.43418).epsilon(1e-12));
}

TEST_CASE("complexity") {
  CHECK(complexity(1.0, 0.0, 0.7) == 1.0);
  CHECK(complexity(5.5, 3.2, 0.0) == 5.5);
  // product of the tabulated ground-state O2 values
  CHECK(complexity(65.367653, 3.5256409472, 1.0) ==
        doctest::Approx(65.367653 * std::exp(3.5256409472)));
  CHECK(complexity(65.367653, 3.5256409472, 1.0) == doctest::Approx(2220.90).epsilon(1e-5));
}

TEST_CASE("hydrogen 1s information measures") {
  const auto s = hydrogen(0, 0);
  CHECK(shannon_r(s) == doctest::Approx(3.0 + std::log(pi)).epsilon(1e-10));
  CHECK(fisher_r_analytic(s) == doctest::Approx(4.0).epsilon(1e-13));
  const auto md = pspace::momentum_density_grid(s);
  CHECK(fisher_p(s, &md).value == doctest::Approx(12.0).epsilon(1e-13));
  // Pi(p) = 32 / (pi (1 + p^2)^4): -int Pi ln Pi p^2 dp + ln 4 pi, by direct quadrature
  const auto ref = quad::integrate_semiinf(
      [](double p) {
        const double v = 32.0 / (pi * std::pow(1.0 + p * p, 4));
        return -v * std::log(v) * p * p;
      },
      std::vector<double>{0.5, 1.0, 2.0, 4.0}, 2.0, 1e-13, 6.0);
  CHECK(shannon_p(s, md) == doctest::Approx(ref.value + std::log(4 * pi)).epsilon(1e-5));
  CHECK(shannon_p(s, md) == doctest::Approx(2.42186).epsilon(1e-4));
}

TEST_CASE("Fisher information: closed form against the gradient integral") {
  for (auto qn : {QuantumState{0, 0, 0}, QuantumState{5, 5, 3}, QuantumState{2, 3, -1}}) {
    const auto s = mie_state("O2+", qn.n, qn.l, qn.m);
    CHECK(fisher_r_gradient(s) == doctest::Approx(fisher_r_analytic(s)).epsilon(1e-8));
  }
  const auto s = mie_state("NO", 2, 1, 0);
  const auto md = pspace::momentum_density_grid(s);
  CHECK(fisher_p_gradient(s, md) == doctest::Approx(fisher_p(s, &md).value).epsilon(1e-6));
}

TEST_CASE("Fisher information table anchors") {
  const auto g = mie_state("O2", 0, 0);
  CHECK(fisher_r_analytic(g) == doctest::Approx(65.367653).epsilon(5e-3));
  CHECK(fisher_p(g, nullptr).value == doctest::Approx(21.239249).epsilon(5e-3));
  CHECK(fisher_p(g, nullptr).method == Method::Analytic);
  CHECK(fisher_r_analytic(mie_state("NO+", 5, 5, 5)) == doctest::Approx(1066.03483).epsilon(5e-3));
  CHECK(fisher_p(mie_state("O2", 5, 5, 0), nullptr).value == doctest::Approx(25.843111).epsilon(5e-3));

  const auto s = mie_state("O2", 5, 5, 2);
  CHECK_THROWS_AS(fisher_p(s, nullptr), std::invalid_argument);
  const auto md = pspace::momentum_density_grid(s);
  const auto fp = fisher_p(s, &md);
  CHECK(fp.method == Method::Quadrature);
  CHECK(fp.value == doctest::Approx(24.654900).epsilon(5e-3));
  // m = 1 uses <p^-2> in the same way
  const auto s1 = mie_state("O2", 5, 5, 1);
  CHECK(fisher_p(s1, &md).value == doctest::Approx(25.249005).epsilon(5e-3));
}

TEST_CASE("Shannon entropy table anchors") {
  const auto g = mie_state("O2", 0, 0);
  CHECK(shannon_r(g) == doctest::Approx(3.5256409472).epsilon(1e-3));
  CHECK(shannon_r(mie_state("NO+", 5, 5, 5)) == doctest::Approx(3.31098).epsilon(1e-3));
  const auto md = pspace::momentum_density_grid(g);
  CHECK(std::fabs(shannon_p(g, md) - 6.0023) < 2e-2);
  const auto n0 = mie_state("NO+", 0, 0);
  CHECK(std::fabs(shannon_p(n0, pspace::momentum_density_grid(n0)) - 6.6868) < 2e-2);
}

TEST_CASE("Shannon decomposition") {
  for (auto qn : {QuantumState{0, 0, 0}, QuantumState{4, 2, 1}, QuantumState{5, 5, 5}}) {
    const auto s = mie_state("O2", qn.n, qn.l, qn.m);
    const auto d = shannon_decomposition(s);
    CHECK(d.radial() == doctest::Approx(shannon_radial(s)).epsilon(1e-9));
    CHECK(d.total() == doctest::Approx(shannon_r(s)).epsilon(1e-9));
    CHECK(d.S5 == doctest::Approx(-shannon_angular(qn.l, qn.m)).epsilon(1e-12));
  }
}

TEST_CASE("measure set and bound checks") {
  const auto s = mie_state("O2", 5, 5, 1);
  const auto md = pspace::momentum_density_grid(s);
  const auto ms = compute_measures(s, md);
  CHECK(ms.molecule == "O2");
  CHECK(ms.I_p_method == Method::Quadrature);
  CHECK(ms.I_t() == doctest::Approx(ms.I_r * ms.I_p));
  CHECK(ms.complexity(1.0).r == doctest::Approx(ms.I_r * std::exp(ms.S_r)));
  CHECK(ms.complexity(2.0 / 3.0).p == doctest::Approx(ms.I_p * std::exp(2.0 / 3.0 * ms.S_p)));
  const auto checks = check_bounds(ms);
  REQUIRE(checks.size() == 3);
  for (const auto& c : checks) CHECK(c.pass);
  CHECK(checks[0].bound == doctest::Approx(54756.0 / 121));

  auto bad = ms;
  bad.I_p = 1e-3;
  const auto failed = check_bounds(bad);
  CHECK_FALSE(failed[0].pass);
  CHECK(failed[0].name == "fisher_product");
}
