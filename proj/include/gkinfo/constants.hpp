#pragma once

#include <numbers>
#include <string>

namespace gkinfo::constants {

// Unit conversion ledger (CODATA 2018). Every conversion in the library goes
// through these four numbers; the table regression tolerances are quoted
// relative to them.
inline constexpr double bohr_per_angstrom = 1.889726124565062;
inline constexpr double hartree_per_wavenumber = 4.556335252912e-6;
inline constexpr double atomic_mass_constant_g = 1.66053906660e-24;
inline constexpr double electron_masses_per_amu = 1822.888486209;

inline constexpr double pi = std::numbers::pi;

/// Textual form of the ledger, hashed into CSV metadata headers.
std::string ledger_text();

/// FNV-1a 64-bit hash of ledger_text(), as 16 hex digits.
std::string ledger_hash();

}  // namespace gkinfo::constants
