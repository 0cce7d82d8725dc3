#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gkinfo/infomeasures.hpp"
#include "gkinfo/molparams.hpp"

namespace gkinfo::report {

struct RunOptions {
  PotentialForm form = PotentialForm::Mie;
  std::vector<double> b_values{2.0 / 3.0, 1.0};
  double tol = 1e-9;      // momentum grid tolerance
  unsigned threads = 0;   // 0: hardware concurrency
  double corrupt_ip = 1.0;  // test hook: I_p is multiplied by this factor
};

struct Job {
  MoleculeSpec molecule;
  QuantumState qn;
};

/// Computes every job. States sharing (molecule, n, l) share one momentum
/// grid. Output order equals input order regardless of thread count.
std::vector<info::MeasureSet> compute_batch(const std::vector<Job>& jobs, const RunOptions& opt);

/// The three blocks of the published tables: vary n (l = m = 0), vary l
/// (n = 5, m = 0), vary m (n = l = 5); index runs 0..5.
enum class Axis { N, L, M };
std::string to_string(Axis a);
Axis parse_axis(const std::string& text);
QuantumState block_state(Axis axis, int index, int fixed_n = 5, int fixed_l = 5, int fixed_m = 0);
std::vector<QuantumState> table_states();

void write_metadata(std::ostream& out, const std::string& verb, const RunOptions& opt);

void write_measures_csv(std::ostream& out, const std::vector<info::MeasureSet>& rows,
                        const RunOptions& opt);

/// `measures` holds, for each molecule in `molecules` order, the 18 table
/// states in block order (n-block, l-block, m-block).
void write_table2_csv(std::ostream& out, const std::vector<std::string>& molecules,
                      const std::vector<std::vector<info::MeasureSet>>& measures,
                      const RunOptions& opt);
void write_table3_csv(std::ostream& out, const std::vector<std::string>& molecules,
                      const std::vector<std::vector<info::MeasureSet>>& measures,
                      const RunOptions& opt);

/// Complexity curves; rows are (molecule, index) in input order.
void write_figure_csv(std::ostream& out, Axis axis, const std::vector<info::MeasureSet>& rows,
                      const RunOptions& opt);

struct VerifyLine {
  info::MeasureSet measures;
  info::BoundCheck check;
};
struct VerifyReport {
  std::vector<VerifyLine> lines;
  int failures = 0;
};
VerifyReport verify(const std::vector<info::MeasureSet>& rows);
void write_verify_report(std::ostream& out, const VerifyReport& rep, const RunOptions& opt);

/// "%.9g"
std::string fmt(double v);

}  // namespace gkinfo::report
