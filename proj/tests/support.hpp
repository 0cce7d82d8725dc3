#pragma once

#include <cmath>
#include <vector>

#include "gkinfo/kratzer.hpp"
#include "gkinfo/molparams.hpp"
#include "gkinfo/quadrature.hpp"

namespace testsupport {

inline std::vector<gkinfo::MoleculeSpec> molecules() {
  std::vector<gkinfo::MoleculeSpec> out;
  for (const auto& r : gkinfo::load_molecules(gkinfo::default_molecule_file()))
    out.push_back(gkinfo::to_atomic_units(r));
  return out;
}

inline gkinfo::MoleculeSpec molecule(const char* name) {
  const auto recs = gkinfo::load_molecules(gkinfo::default_molecule_file());
  return gkinfo::to_atomic_units(gkinfo::find_molecule(recs, name));
}

inline gkinfo::BoundState mie_state(const char* name, int n, int l, int m = 0) {
  const auto mol = molecule(name);
  return gkinfo::build_state(mol, gkinfo::potential_params(mol, gkinfo::PotentialForm::Mie),
                             {n, l, m});
}

// mu = 1, v = -1/r: the hydrogen atom.
inline gkinfo::BoundState hydrogen(int n, int l, int m = 0) {
  const gkinfo::MoleculeSpec h{"H", 1.0, 0.0, 0.0};
  const gkinfo::PotentialParams p{-1.0, 0.0, 0.0, gkinfo::PotentialForm::KratzerFues};
  return gkinfo::build_state(h, p, {n, l, m});
}

// int f(r) psi(r)^2 r^2 dr by adaptive quadrature on the state's breakpoints.
template <class F>
double radial_average(const gkinfo::BoundState& s, F f, double tol = 1e-13) {
  const auto bp = s.breakpoints();
  gkinfo::quad::QuadratureOptions opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = tol;
  opt.max_subdivisions = 100000;
  return gkinfo::quad::integrate_panels(
             [&](double r) {
               if (r <= 0.0) return 0.0;
               return f(r) * gkinfo::radial_density(s, r) * r * r;
             },
             bp, opt)
      .value;
}

inline double rel_diff(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace testsupport
