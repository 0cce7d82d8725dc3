#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkinfo/kratzer.hpp"
#include "gkinfo/pspace.hpp"

namespace gkinfo::info {

enum class Method { Analytic, Quadrature };
std::string to_string(Method m);

struct Complexity {
  double b = 1.0;
  double r = 0.0;  // I_r e^{b S_r}
  double p = 0.0;  // I_p e^{b S_p}
};

struct BoundCheck {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // value - bound
  bool pass = false;
};

/// Every measure for one state.
struct MeasureSet {
  std::string molecule;
  QuantumState qn;
  double I_r = 0.0, I_p = 0.0;
  double S_r = 0.0, S_p = 0.0;
  double r2 = 0.0, p2 = 0.0;  // <r^2>, <p^2>
  Method I_r_method = Method::Analytic;
  Method I_p_method = Method::Analytic;
  Method S_r_method = Method::Quadrature;
  Method S_p_method = Method::Quadrature;
  std::vector<Complexity> complexities;

  double I_t() const { return I_r * I_p; }
  double S_t() const { return S_r + S_p; }
  const Complexity& complexity(double b) const;
};

/// The five pieces of the position entropy; S_r = -(S1 + S2 + S3 + S4 + S5).
struct ShannonDecomposition {
  double S1 = 0.0;  // ln N^2
  double S2 = 0.0;  // -<xi r>
  double S3 = 0.0;  // 2 beta <ln r>
  double S4 = 0.0;  // <ln L^2>
  double S5 = 0.0;  // oint |Y|^2 ln |Y|^2 dOmega
  double radial() const { return -(S1 + S2 + S3 + S4); }
  double total() const { return -(S1 + S2 + S3 + S4 + S5); }
};

inline constexpr double kBoundTolerance = 1e-6;

/// 4 <p^2> - 2 (2l+1) |m| <r^-2>, both moments in closed form.
double fisher_r_analytic(const BoundState& state);

struct FisherValue {
  double value = 0.0;
  Method method = Method::Analytic;
};

/// m = 0: 4 <r^2> in closed form. m != 0: 4 <r^2> - 2 (2l+1) |m| <p^-2>
/// with <p^-2> from the momentum grid, which is then required.
FisherValue fisher_p(const BoundState& state, const pspace::MomentumDensity* md);

/// Gradient-form Fisher information by direct quadrature,
/// 4 int psi'^2 r^2 dr + 4 <r^-2> A(l, m), with A the angular gradient integral.
double fisher_r_gradient(const BoundState& state);

/// Momentum analogue of fisher_r_gradient on the momentum grid.
double fisher_p_gradient(const BoundState& state, const pspace::MomentumDensity& md);

/// oint (d|Y_{l,m}|/d theta)^2 dOmega by theta quadrature. Equals
/// l(l+1) - |m|(2l+1)/2.
double angular_gradient_integral(int l, int m);

/// -oint |Y|^2 ln |Y|^2 dOmega.
double shannon_angular(int l, int m);

/// -int psi^2 ln psi^2 r^2 dr by node-split quadrature.
double shannon_radial(const BoundState& state);

/// Full position-space entropy: radial + angular.
double shannon_r(const BoundState& state);

/// Full momentum-space entropy: -int Pi ln Pi p^2 dp + angular.
double shannon_p(const BoundState& state, const pspace::MomentumDensity& md);

ShannonDecomposition shannon_decomposition(const BoundState& state);

/// I e^{b S}, evaluated through logs when |b S| is large.
double complexity(double I, double S, double b);

/// 16 (1 - 2|m|/(2L+1))^2 (L + 3/2)^2 with L = l + (D-3)/2.
double fisher_bound(int l, int m, int D = 3);

/// Entropic lower bound d (1 + ln pi).
double entropic_bound(int d = 3);

/// Fisher product, entropy sum and Heisenberg product checks.
std::vector<BoundCheck> check_bounds(const MeasureSet& ms);

/// Assembles a MeasureSet. md must be the momentum grid of `state`.
MeasureSet compute_measures(const BoundState& state, const pspace::MomentumDensity& md,
                            const std::vector<double>& b_values = {2.0 / 3.0, 1.0});

}  // namespace gkinfo::info
