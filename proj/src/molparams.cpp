#include "gkinfo/molparams.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gkinfo/constants.hpp"

namespace gkinfo {

namespace constants {

std::string ledger_text() {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "bohr_per_angstrom=%.17g;hartree_per_wavenumber=%.17g;"
                "atomic_mass_constant_g=%.17g;electron_masses_per_amu=%.17g",
                bohr_per_angstrom, hartree_per_wavenumber, atomic_mass_constant_g,
                electron_masses_per_amu);
  return buf;
}

std::string ledger_hash() {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : ledger_text()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace constants

namespace {

double parse_positive(const std::string& token, const char* field, int line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size()) {
    throw MoleculeFileError("line " + std::to_string(line) + ": cannot parse " + field +
                                " from '" + token + "'",
                            line);
  }
  if (!(v > 0.0)) {
    throw MoleculeFileError(
        "line " + std::to_string(line) + ": " + field + " must be positive, got " + token, line);
  }
  return v;
}

}  // namespace

std::vector<SpectroscopicRecord> parse_molecules(const std::string& text) {
  std::vector<SpectroscopicRecord> out;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() < 4 || tok.size() > 5) {
      throw MoleculeFileError("line " + std::to_string(line) + ": expected 4 or 5 fields, got " +
                                  std::to_string(tok.size()),
                              line);
    }
    SpectroscopicRecord rec;
    rec.name = tok[0];
    rec.mu_grams = parse_positive(tok[1], "reduced mass", line);
    rec.D0_wavenumber = parse_positive(tok[2], "dissociation energy", line);
    rec.r0_angstrom = parse_positive(tok[3], "equilibrium separation", line);
    if (tok.size() == 5) rec.term_symbol = tok[4];
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<SpectroscopicRecord> load_molecules(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MoleculeFileError("cannot open molecule file " + path.string(), 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_molecules(buf.str());
}

MoleculeSpec to_atomic_units(const SpectroscopicRecord& rec) {
  using namespace constants;
  MoleculeSpec spec;
  spec.name = rec.name;
  spec.mu = rec.mu_grams * 1e-23 / atomic_mass_constant_g * electron_masses_per_amu;
  spec.D0 = rec.D0_wavenumber * hartree_per_wavenumber;
  spec.r0 = rec.r0_angstrom * bohr_per_angstrom;
  return spec;
}

SpectroscopicRecord from_atomic_units(const MoleculeSpec& spec) {
  using namespace constants;
  SpectroscopicRecord rec;
  rec.name = spec.name;
  rec.mu_grams = spec.mu / electron_masses_per_amu * atomic_mass_constant_g / 1e-23;
  rec.D0_wavenumber = spec.D0 / hartree_per_wavenumber;
  rec.r0_angstrom = spec.r0 / bohr_per_angstrom;
  return rec;
}

PotentialParams potential_params(const MoleculeSpec& spec, PotentialForm form) {
  PotentialParams p;
  p.x = -2.0 * spec.D0 * spec.r0;
  p.y = spec.D0 * spec.r0 * spec.r0;
  p.z = form == PotentialForm::Mie ? spec.D0 : 0.0;
  p.form = form;
  return p;
}

std::filesystem::path default_molecule_file() {
  if (const char* env = std::getenv("GKINFO_MOLECULE_FILE"); env && *env) return env;
  return std::filesystem::path(GKINFO_DATA_DIR) / "molecules.dat";
}

const SpectroscopicRecord& find_molecule(const std::vector<SpectroscopicRecord>& records,
                                         const std::string& name) {
  for (const auto& r : records)
    if (r.name == name) return r;
  throw std::out_of_range("unknown molecule '" + name + "'");
}

std::string to_string(PotentialForm form) {
  return form == PotentialForm::Mie ? "mie" : "kratzer-fues";
}

PotentialForm parse_potential_form(const std::string& text) {
  if (text == "mie") return PotentialForm::Mie;
  if (text == "kratzer-fues" || text == "kratzer") return PotentialForm::KratzerFues;
  throw std::invalid_argument("unknown potential form '" + text + "'");
}

}  // namespace gkinfo
