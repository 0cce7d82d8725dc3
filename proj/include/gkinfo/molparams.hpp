#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkinfo {

/// One row of the spectroscopic table, in the units it is published in.
struct SpectroscopicRecord {
  std::string name;
  std::string term_symbol;  // opaque, may be empty
  double mu_grams = 0.0;       // reduced mass / 1e-23 g
  double D0_wavenumber = 0.0;  // cm^-1
  double r0_angstrom = 0.0;    // Angstrom
};

/// A molecule in atomic units.
struct MoleculeSpec {
  std::string name;
  double mu = 0.0;  // electron masses
  double D0 = 0.0;  // Hartree
  double r0 = 0.0;  // Bohr
};

enum class PotentialForm { KratzerFues, Mie };

/// v(r) = x/r + y/r^2 + z.
struct PotentialParams {
  double x = 0.0;  // Hartree Bohr
  double y = 0.0;  // Hartree Bohr^2
  double z = 0.0;  // Hartree
  PotentialForm form = PotentialForm::Mie;
};

class MoleculeFileError : public std::runtime_error {
 public:
  MoleculeFileError(const std::string& what, int line)
      : std::runtime_error(what), line_(line) {}
  /// 1-based line number, or 0 when the error is not tied to a line.
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Parse a whitespace-separated molecule file. Blank lines and everything
/// after '#' are ignored. Each data line is
///   name  mu/1e-23g  D0/cm^-1  r0/Angstrom  [term symbol]
std::vector<SpectroscopicRecord> load_molecules(const std::filesystem::path& path);

/// Same format, from an in-memory string.
std::vector<SpectroscopicRecord> parse_molecules(const std::string& text);

MoleculeSpec to_atomic_units(const SpectroscopicRecord& rec);

/// Inverse of to_atomic_units (name and numeric fields only).
SpectroscopicRecord from_atomic_units(const MoleculeSpec& spec);

PotentialParams potential_params(const MoleculeSpec& spec, PotentialForm form);

/// Location of the bundled molecule file. The GKINFO_MOLECULE_FILE
/// environment variable overrides the compiled-in default.
std::filesystem::path default_molecule_file();

/// Lookup by name (exact match). Throws std::out_of_range when absent.
const SpectroscopicRecord& find_molecule(const std::vector<SpectroscopicRecord>& records,
                                         const std::string& name);

std::string to_string(PotentialForm form);
PotentialForm parse_potential_form(const std::string& text);

}  // namespace gkinfo
