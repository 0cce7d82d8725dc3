#pragma once

#include "gkinfo/kratzer.hpp"

namespace gkinfo::moments {

/// ln of  int_0^inf t^(alpha+shift) e^-t [L_n^alpha(t)]^2 dt
///      = ln sum_i binom(shift, n-i)^2 Gamma(alpha+shift+1+i) / i!
/// Requires alpha + shift > -1.
double log_laguerre_moment(int n, double alpha, int shift);

/// exp(log_laguerre_moment); overflows to inf for alpha in the hundreds.
double laguerre_moment(int n, double alpha, int shift);

/// <r^k> for k in {-2, -1, 0, 1, 2}, closed form.
double radial_moment(const BoundState& state, int k);

double expect_inv_r(const BoundState& state);
double expect_inv_r2(const BoundState& state);
double expect_r2(const BoundState& state);
/// <xi r>, dimensionless.
double expect_xi_r(const BoundState& state);
/// <p^2> = 2 mu (E - z - x <1/r> - y <1/r^2>), with <H> = E exactly.
double expect_p2(const BoundState& state);

}  // namespace gkinfo::moments
