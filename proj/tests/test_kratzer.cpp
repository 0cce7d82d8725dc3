#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gkinfo/kratzer.hpp"
#include "support.hpp"

using namespace gkinfo;
using testsupport::hydrogen;
using testsupport::mie_state;

TEST_CASE("state validation") {
  CHECK_THROWS_AS((QuantumState{0, 1, 2}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((QuantumState{-1, 0, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((QuantumState{11, 0, 0}.validate()), std::invalid_argument);
  CHECK_NOTHROW((QuantumState{10, 10, -10}.validate()));
  CHECK_THROWS_AS(mie_state("O2", 0, 1, 2), std::invalid_argument);
}

TEST_CASE("beta") {
  CHECK(beta_ell(1.0, 0.0, 0) == 0.0);
  for (int l = 0; l <= 10; ++l) CHECK(beta_ell(3.7, 0.0, l) == doctest::Approx(l));
  const auto o2 = testsupport::molecule("O2");
  const auto p = potential_params(o2, PotentialForm::Mie);
  CHECK(beta_ell(o2.mu, p.y, 0) == doctest::Approx(170.5364017348465287).epsilon(1e-13));
  CHECK_THROWS_AS(beta_ell(1.0, -10.0, 0), std::domain_error);
}

TEST_CASE("energies") {
  const PotentialParams coulomb{-1.0, 0.0, 0.0, PotentialForm::KratzerFues};
  for (int n = 0; n <= 10; ++n)
    CHECK(energy(1.0, coulomb, n, 0) ==
          doctest::Approx(-0.5 / ((n + 1.0) * (n + 1.0))).epsilon(1e-15));

  const auto o2 = testsupport::molecule("O2");
  const auto mie = potential_params(o2, PotentialForm::Mie);
  // extended-precision evaluation with the ledger constants
  CHECK(energy(o2.mu, mie, 0, 0) == doctest::Approx(0.0011166894515122655).epsilon(1e-11));
  // approaches the dissociation threshold from below
  double prev = -1e300;
  for (int n = 0; n <= 10; ++n) {
    const double e = energy(o2.mu, mie, n, 0);
    CHECK(e > prev);
    CHECK(e < mie.z);
    prev = e;
  }
  CHECK(energy(o2.mu, mie, 1000000, 0) == doctest::Approx(mie.z).epsilon(1e-3));
}

TEST_CASE("hydrogen ground state") {
  const auto s = hydrogen(0, 0);
  CHECK(s.xi() == doctest::Approx(2.0));
  CHECK(s.beta() == 0.0);
  CHECK(s.log_norm() == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(psi_radial(s, 1.0).value() == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-14));
  CHECK(s.nodes().empty());
  // 2p: psi = r e^{-r/2} / (2 sqrt 6)
  const auto p = hydrogen(0, 1);
  CHECK(psi_radial(p, 1.5).value() ==
        doctest::Approx(1.5 * std::exp(-0.75) / (2.0 * std::sqrt(6.0))).epsilon(1e-13));
}

TEST_CASE("state parameters are mutually consistent") {
  for (const auto& mol : testsupport::molecules())
    for (int n : {0, 5, 10}) {
      const auto s = build_state(mol, potential_params(mol, PotentialForm::Mie), {n, 0, 0});
      const double lhs = s.xi() * s.xi();
      const double rhs = -8.0 * mol.mu * (s.energy() - s.params().z);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
      CHECK(s.nodes().size() == static_cast<std::size_t>(n));
      CHECK(s.domain().lo < s.domain().peak);
      CHECK(s.domain().peak < s.domain().hi);
    }
  const auto o2 = mie_state("O2", 0, 0);
  const auto nop = mie_state("NO+", 0, 0);
  CHECK(nop.energy() - nop.params().z < o2.energy() - o2.params().z);
}

TEST_CASE("wavefunction nodes") {
  const auto s = mie_state("O2", 5, 2);
  REQUIRE(s.nodes().size() == 5);
  for (double r : s.nodes()) {
    const auto psi = psi_radial(s, r);
    // relative to the neighbouring lobe the value is rounding noise
    const auto near = psi_radial(s, r + 0.05 * s.domain().width);
    CHECK((psi.is_zero() || psi.log_magnitude < near.log_magnitude - 20.0));
  }
  CHECK(density_r(mie_state("O2", 3, 1), 2.3, std::numbers::pi / 2) ==
        doctest::Approx(0.0).scale(1.0));
  CHECK_THROWS_AS(psi_radial(s, 0.0), std::domain_error);
}

TEST_CASE("derivative agrees with finite differences") {
  const auto s = mie_state("NO", 3, 4);
  for (double f : {0.97, 1.0, 1.02}) {
    const double r = f * s.domain().peak;
    const double h = 1e-5 * s.domain().width;
    const double fd = (psi_radial(s, r + h).value() - psi_radial(s, r - h).value()) / (2 * h);
    CHECK(psi_radial_derivative(s, r).value() == doctest::Approx(fd).epsilon(1e-6));
  }
  const auto h = hydrogen(0, 0);
  CHECK(psi_radial_derivative(h, 1.0).value() == doctest::Approx(-2.0 * std::exp(-1.0)));
}

TEST_CASE("radial density is normalized") {
  for (auto s : {mie_state("O2", 0, 0), mie_state("O2+", 5, 5), hydrogen(2, 1)})
    CHECK(testsupport::radial_average(s, [](double) { return 1.0; }) ==
          doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("Schroedinger residual") {
  CHECK(schrodinger_residual(hydrogen(0, 0), 1.0) < 1e-6);
  const auto o2 = testsupport::molecule("O2");
  CHECK(schrodinger_residual(mie_state("O2", 0, 0), o2.r0) < 1e-5);
  CHECK(schrodinger_residual(mie_state("O2", 5, 3), 1.2 * o2.r0) < 1e-5);
  const auto s = mie_state("O2", 2, 0);
  CHECK_THROWS_AS(schrodinger_residual(s, s.nodes()[0]), std::domain_error);
}
