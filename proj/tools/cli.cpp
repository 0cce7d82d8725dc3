#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "gkinfo/pspace.hpp"
#include "gkinfo/quadrature.hpp"
#include "gkinfo/report.hpp"

namespace gkinfo::cli {

namespace {

struct Range {
  int lo = 0, hi = 0;
  bool is_range = false;
};

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

Range parse_range(const std::string& field) {
  const auto dots = field.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(field);
    return {v, v, false};
  }
  Range r{parse_int(field.substr(0, dots)), parse_int(field.substr(dots + 2)), true};
  if (r.hi < r.lo) throw std::invalid_argument("empty range '" + field + "'");
  return r;
}

struct Config {
  std::vector<std::string> molecules;
  std::vector<std::string> states;
  std::string form = "mie";
  std::vector<std::string> b_values;
  double tol = 1e-9;
  unsigned threads = 0;
  std::string out;
  std::string vary;
  std::string fixed;
  int max_index = 5;
  double corrupt_ip = 1.0;
};

report::RunOptions run_options(const Config& cfg) {
  report::RunOptions opt;
  opt.form = parse_potential_form(cfg.form);
  if (!cfg.b_values.empty()) {
    opt.b_values.clear();
    for (const auto& b : cfg.b_values) opt.b_values.push_back(parse_b_value(b));
  }
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("--tol must be positive");
  opt.tol = cfg.tol;
  opt.threads = cfg.threads;
  opt.corrupt_ip = cfg.corrupt_ip;
  return opt;
}

std::vector<MoleculeSpec> select_molecules(const std::vector<std::string>& names) {
  const auto records = load_molecules(default_molecule_file());
  std::vector<MoleculeSpec> out;
  if (names.empty()) {
    for (const auto& r : records) out.push_back(to_atomic_units(r));
  } else {
    for (const auto& n : names) {
      try {
        out.push_back(to_atomic_units(find_molecule(records, n)));
      } catch (const std::out_of_range&) {
        throw std::invalid_argument("unknown molecule '" + n + "'");
      }
    }
  }
  return out;
}

/// Writes to --out when given, otherwise to `fallback`.
template <class F>
void emit(const std::string& path, std::ostream& fallback, F&& write) {
  if (path.empty() || path == "-") {
    write(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open output file '" + path + "'");
  write(f);
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

std::vector<std::vector<info::MeasureSet>> table_measures(const std::vector<MoleculeSpec>& mols,
                                                          const report::RunOptions& opt) {
  const auto states = report::table_states();
  std::vector<report::Job> jobs;
  for (const auto& m : mols)
    for (const auto& qn : states) jobs.push_back({m, qn});
  const auto flat = report::compute_batch(jobs, opt);
  std::vector<std::vector<info::MeasureSet>> out(mols.size());
  for (std::size_t i = 0; i < flat.size(); ++i) out[i / states.size()].push_back(flat[i]);
  return out;
}

int cmd_measures(const Config& cfg, std::ostream& out) {
  const auto opt = run_options(cfg);
  if (cfg.states.empty()) throw std::invalid_argument("measures: at least one --state is required");
  std::vector<QuantumState> states;
  for (const auto& s : cfg.states)
    for (const auto& qn : parse_state_spec(s)) states.push_back(qn);
  const auto mols = select_molecules(cfg.molecules);
  std::vector<report::Job> jobs;
  for (const auto& m : mols)
    for (const auto& qn : states) jobs.push_back({m, qn});
  const auto rows = report::compute_batch(jobs, opt);
  emit(cfg.out, out, [&](std::ostream& o) { report::write_measures_csv(o, rows, opt); });
  return kOk;
}

int cmd_tables(const Config& cfg, std::ostream& out) {
  const auto opt = run_options(cfg);
  const auto mols = select_molecules(cfg.molecules);
  const auto measures = table_measures(mols, opt);
  std::vector<std::string> names;
  for (const auto& m : mols) names.push_back(m.name);
  const std::filesystem::path dir = cfg.out.empty() ? "." : cfg.out;
  std::filesystem::create_directories(dir);
  const auto t2 = (dir / "table2.csv").string();
  const auto t3 = (dir / "table3.csv").string();
  emit(t2, out, [&](std::ostream& o) { report::write_table2_csv(o, names, measures, opt); });
  emit(t3, out, [&](std::ostream& o) { report::write_table3_csv(o, names, measures, opt); });
  out << "wrote " << t2 << "\nwrote " << t3 << "\n";
  return kOk;
}

int cmd_figure(const Config& cfg, std::ostream& out) {
  const auto opt = run_options(cfg);
  const auto axis = report::parse_axis(cfg.vary);
  // Defaults follow the published figures.
  int fn = 5, fl = axis == report::Axis::M ? 5 : 0, fm = 0;
  if (!cfg.fixed.empty()) {
    const auto fixed = parse_state_spec(cfg.fixed);
    if (fixed.size() != 1) throw std::invalid_argument("--fixed takes a single n,l,m triple");
    fn = fixed[0].n;
    fl = fixed[0].l;
    fm = fixed[0].m;
  }
  if (axis == report::Axis::L) fl = 0;
  if (cfg.max_index < 0 || cfg.max_index > QuantumState::max_index)
    throw std::invalid_argument("--max-index out of range");
  const auto mols = select_molecules(cfg.molecules);
  std::vector<report::Job> jobs;
  for (const auto& m : mols)
    for (int i = 0; i <= cfg.max_index; ++i) {
      auto qn = report::block_state(axis, i, fn, fl, fm);
      if (axis == report::Axis::N) qn = {i, fl, fm};
      if (axis == report::Axis::L && std::abs(fm) > i) continue;
      jobs.push_back({m, qn});
    }
  const auto rows = report::compute_batch(jobs, opt);
  emit(cfg.out, out, [&](std::ostream& o) { report::write_figure_csv(o, axis, rows, opt); });
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const auto opt = run_options(cfg);
  const auto mols = select_molecules(cfg.molecules);
  std::vector<info::MeasureSet> rows;
  for (auto& list : table_measures(mols, opt))
    for (auto& ms : list) rows.push_back(std::move(ms));
  const auto rep = report::verify(rows);
  emit(cfg.out, out, [&](std::ostream& o) { report::write_verify_report(o, rep, opt); });
  if (!cfg.out.empty() && cfg.out != "-")
    out << "# summary: " << rep.lines.size() << " checks, " << rep.failures << " violations\n";
  return rep.failures ? kBoundViolation : kOk;
}

int cmd_dump_momentum(const Config& cfg, std::ostream& out) {
  const auto opt = run_options(cfg);
  if (cfg.molecules.size() != 1 || cfg.states.size() != 1)
    throw std::invalid_argument("dump-momentum takes exactly one --molecule and one --state");
  const auto states = parse_state_spec(cfg.states[0]);
  if (states.size() != 1) throw std::invalid_argument("dump-momentum takes a single state");
  const auto mol = select_molecules(cfg.molecules).front();
  const auto s = build_state(mol, potential_params(mol, opt.form), states[0]);
  const auto md = pspace::momentum_density_grid(s, opt.tol);
  emit(cfg.out, out, [&](std::ostream& o) {
    report::write_metadata(o, "dump-momentum", opt);
    o << "# molecule=" << mol.name << " state=" << s.qn().n << ',' << s.qn().l << ','
      << s.qn().m << " p_max=" << report::fmt(md.p_max)
      << " norm_defect=" << report::fmt(md.raw_norm_defect) << "\n";
    pspace::write_density_csv(o, md);
  });
  return kOk;
}

}  // namespace

std::vector<QuantumState> parse_state_spec(const std::string& text) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    fields.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 3) throw std::invalid_argument("state must be 'n,l,m', got '" + text + "'");
  const auto n = parse_range(fields[0]);
  const auto l = parse_range(fields[1]);
  const auto m = parse_range(fields[2]);
  std::vector<QuantumState> out;
  for (int a = n.lo; a <= n.hi; ++a)
    for (int b = l.lo; b <= l.hi; ++b)
      for (int c = m.lo; c <= m.hi; ++c) {
        const QuantumState qn{a, b, c};
        if (m.is_range && std::abs(c) > b) continue;
        qn.validate();
        out.push_back(qn);
      }
  if (out.empty()) throw std::invalid_argument("state spec '" + text + "' selects no valid state");
  return out;
}

double parse_b_value(const std::string& text) {
  const auto slash = text.find('/');
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("bad b value '" + text + "'");
    return v;
  };
  const double v = slash == std::string::npos
                       ? number(text)
                       : number(text.substr(0, slash)) / number(text.substr(slash + 1));
  if (!std::isfinite(v)) throw std::invalid_argument("bad b value '" + text + "'");
  return v;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Information measures of diatomic molecules in the Kratzer/Mie potential"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--molecule", cfg.molecules, "Molecule name (repeatable; default: all)");
    sub->add_option("--form", cfg.form, "Potential form: mie | kratzer-fues")->capture_default_str();
    sub->add_option("--b", cfg.b_values, "Complexity exponents (default 2/3 and 1)");
    sub->add_option("--tol", cfg.tol, "Momentum grid relative tolerance")->capture_default_str();
    sub->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
    sub->add_option("--corrupt-ip", cfg.corrupt_ip)->group("");  // test hook
  };

  auto* measures = app.add_subcommand("measures", "Measures for selected states");
  common(measures);
  measures->add_option("--state", cfg.states, "n,l,m (fields may be ranges a..b)");
  measures->add_option("--out", cfg.out, "Output CSV (default: stdout)");

  auto* tables = app.add_subcommand("tables", "Write table2.csv and table3.csv");
  common(tables);
  tables->add_option("--out", cfg.out, "Output directory (default: .)");

  auto* figure = app.add_subcommand("figure", "Complexity curves along one quantum number");
  common(figure);
  figure->add_option("--vary", cfg.vary, "n | l | m")->required();
  figure->add_option("--fixed", cfg.fixed, "Fixed indices n,l,m (the varied one is ignored)");
  figure->add_option("--max-index", cfg.max_index, "Last value of the varied index")
      ->capture_default_str();
  figure->add_option("--out", cfg.out, "Output CSV (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Check the uncertainty bounds over the table states");
  common(verify);
  verify->add_option("--out", cfg.out, "Report CSV (default: stdout)");

  auto* dump = app.add_subcommand("dump-momentum", "Tabulate the radial momentum density");
  common(dump);
  dump->add_option("--state", cfg.states, "n,l,m");
  dump->add_option("--out", cfg.out, "Output CSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (measures->parsed()) return cmd_measures(cfg, out);
    if (tables->parsed()) return cmd_tables(cfg, out);
    if (figure->parsed()) return cmd_figure(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (dump->parsed()) return cmd_dump_momentum(cfg, out);
  } catch (const quad::QuadratureError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace gkinfo::cli
