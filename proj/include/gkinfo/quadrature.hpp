#pragma once

#include <array>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace gkinfo::quad {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int subdivisions = 0;  // number of panels in the final partition
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 4000;
};

/// Thrown when the error target is not met within the subdivision cap. The
/// best estimate obtained is attached.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const QuadratureResult& partial() const noexcept { return partial_; }

 private:
  QuadratureResult partial_;
};

using Integrand = std::function<double(double)>;

/// 21-point Kronrod rule with its embedded 10-point Gauss rule on [-1, 1].
/// Nodes are ordered ascending; gauss_weight is zero at non-Gauss nodes.
struct KronrodRule {
  std::array<double, 21> node;
  std::array<double, 21> kronrod_weight;
  std::array<double, 21> gauss_weight;
};
const KronrodRule& kronrod21();

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton on P_n).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Globally adaptive Gauss-Kronrod integration over [a, b]. The error target
/// is max(abs_tol, rel_tol * |value|). Endpoints are never evaluated, so
/// integrable endpoint singularities (e.g. log x) are fine.
QuadratureResult integrate_interval(const Integrand& f, double a, double b,
                                    const QuadratureOptions& opt);

/// Convenience overload: absolute tolerance only.
QuadratureResult integrate_interval(const Integrand& f, double a, double b, double tol);

/// Same as integrate_interval but every breakpoint is a mandatory panel
/// boundary. breakpoints must be strictly increasing with at least two entries.
QuadratureResult integrate_panels(const Integrand& f, std::span<const double> breakpoints,
                                  const QuadratureOptions& opt);

/// Integral over [0, inf). The interior [0, s_1], ..., [s_{k-1}, s_k] uses the
/// split points; beyond s_k panels of width ~4*scale are appended until the
/// tail bound of an envelope A r^power e^{-r/scale} fitted to |f| at the panel
/// end drops below tol/10. Requires f to decay at least that fast.
QuadratureResult integrate_semiinf(const Integrand& f, std::span<const double> splits,
                                   double scale, double tol, double power = 0.0);

}  // namespace gkinfo::quad
