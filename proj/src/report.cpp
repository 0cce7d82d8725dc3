#include "gkinfo/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "gkinfo/constants.hpp"
#include "gkinfo/pspace.hpp"

namespace gkinfo::report {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::vector<info::MeasureSet> compute_batch(const std::vector<Job>& jobs, const RunOptions& opt) {
  for (const auto& j : jobs) j.qn.validate();

  // Group by (molecule, n, l); the momentum density does not depend on m.
  std::map<std::tuple<std::string, int, int>, std::size_t> group_of;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto key = std::make_tuple(jobs[i].molecule.name, jobs[i].qn.n, jobs[i].qn.l);
    auto [it, inserted] = group_of.try_emplace(key, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(i);
  }

  std::vector<info::MeasureSet> out(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t g = next.fetch_add(1);
      if (g >= groups.size()) return;
      try {
        const auto& first = jobs[groups[g].front()];
        const auto params = potential_params(first.molecule, opt.form);
        const auto base = build_state(first.molecule, params, first.qn);
        const auto md = pspace::momentum_density_grid(base, opt.tol);
        for (std::size_t idx : groups[g]) {
          const auto state = build_state(jobs[idx].molecule, params, jobs[idx].qn);
          auto ms = info::compute_measures(state, md, opt.b_values);
          if (opt.corrupt_ip != 1.0) {
            ms.I_p *= opt.corrupt_ip;
            for (auto& c : ms.complexities) c.p *= opt.corrupt_ip;
          }
          out[idx] = std::move(ms);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = groups.size();
      }
    }
  };
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, groups.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::string to_string(Axis a) {
  switch (a) {
    case Axis::N: return "n";
    case Axis::L: return "l";
    case Axis::M: return "m";
  }
  return "?";
}

Axis parse_axis(const std::string& text) {
  if (text == "n") return Axis::N;
  if (text == "l") return Axis::L;
  if (text == "m") return Axis::M;
  throw std::invalid_argument("axis must be one of n, l, m");
}

QuantumState block_state(Axis axis, int index, int fixed_n, int fixed_l, int fixed_m) {
  switch (axis) {
    case Axis::N: return {index, 0, 0};
    case Axis::L: return {fixed_n, index, fixed_m};
    case Axis::M: return {fixed_n, fixed_l, index};
  }
  return {};
}

std::vector<QuantumState> table_states() {
  std::vector<QuantumState> s;
  for (int i = 0; i <= 5; ++i) s.push_back({i, 0, 0});
  for (int i = 0; i <= 5; ++i) s.push_back({5, i, 0});
  for (int i = 0; i <= 5; ++i) s.push_back({5, 5, i});
  return s;
}

void write_metadata(std::ostream& out, const std::string& verb, const RunOptions& opt) {
  out << "# gkinfo " << verb << "\n";
  out << "# constants_ledger_hash=" << constants::ledger_hash() << "\n";
  out << "# constants=" << constants::ledger_text() << "\n";
  out << "# potential_form=" << to_string(opt.form) << "\n";
  out << "# momentum_grid_tol=" << fmt(opt.tol) << "\n";
  out << "# b_values=";
  for (std::size_t i = 0; i < opt.b_values.size(); ++i)
    out << (i ? ";" : "") << fmt(opt.b_values[i]);
  out << "\n";
}

namespace {

std::string b_label(double b) { return "b" + fmt(b); }

const char* block_name(std::size_t row) {
  static const char* names[] = {"n", "l", "m"};
  return names[row / 6];
}

void check_table_shape(const std::vector<std::string>& molecules,
                       const std::vector<std::vector<info::MeasureSet>>& measures) {
  if (measures.size() != molecules.size())
    throw std::invalid_argument("table: one measure list per molecule required");
  for (const auto& m : measures)
    if (m.size() != 18) throw std::invalid_argument("table: 18 states per molecule required");
}

}  // namespace

void write_measures_csv(std::ostream& out, const std::vector<info::MeasureSet>& rows,
                        const RunOptions& opt) {
  write_metadata(out, "measures", opt);
  out << "molecule,n,l,m,I_r,I_p,I_t,S_r,S_p,S_t";
  for (double b : opt.b_values) out << ",C_r_" << b_label(b) << ",C_p_" << b_label(b);
  out << ",fisher_margin,entropy_margin,heisenberg_margin,I_r_method,I_p_method,S_r_method,"
         "S_p_method\n";
  for (const auto& ms : rows) {
    out << ms.molecule << ',' << ms.qn.n << ',' << ms.qn.l << ',' << ms.qn.m << ',' << fmt(ms.I_r)
        << ',' << fmt(ms.I_p) << ',' << fmt(ms.I_t()) << ',' << fmt(ms.S_r) << ',' << fmt(ms.S_p)
        << ',' << fmt(ms.S_t());
    for (double b : opt.b_values) {
      const auto& c = ms.complexity(b);
      out << ',' << fmt(c.r) << ',' << fmt(c.p);
    }
    for (const auto& c : info::check_bounds(ms)) out << ',' << fmt(c.margin);
    out << ',' << info::to_string(ms.I_r_method) << ',' << info::to_string(ms.I_p_method) << ','
        << info::to_string(ms.S_r_method) << ',' << info::to_string(ms.S_p_method) << '\n';
  }
}

void write_table2_csv(std::ostream& out, const std::vector<std::string>& molecules,
                      const std::vector<std::vector<info::MeasureSet>>& measures,
                      const RunOptions& opt) {
  check_table_shape(molecules, measures);
  write_metadata(out, "tables (Fisher information)", opt);
  out << "block,index";
  for (const auto& m : molecules) out << ',' << m << "_I_r," << m << "_I_p," << m << "_I_t";
  out << ",I_t_bound,I_p_method\n";
  for (std::size_t row = 0; row < 18; ++row) {
    out << block_name(row) << ',' << row % 6;
    for (const auto& list : measures) {
      const auto& ms = list[row];
      out << ',' << fmt(ms.I_r) << ',' << fmt(ms.I_p) << ',' << fmt(ms.I_t());
    }
    const auto& qn = measures.front()[row].qn;
    out << ',' << fmt(info::fisher_bound(qn.l, qn.m)) << ','
        << info::to_string(measures.front()[row].I_p_method) << '\n';
  }
}

void write_table3_csv(std::ostream& out, const std::vector<std::string>& molecules,
                      const std::vector<std::vector<info::MeasureSet>>& measures,
                      const RunOptions& opt) {
  check_table_shape(molecules, measures);
  write_metadata(out, "tables (Shannon entropy)", opt);
  out << "block,index";
  for (const auto& m : molecules) out << ',' << m << "_S_r," << m << "_S_p," << m << "_S_t";
  out << ",S_t_bound\n";
  for (std::size_t row = 0; row < 18; ++row) {
    out << block_name(row) << ',' << row % 6;
    for (const auto& list : measures) {
      const auto& ms = list[row];
      out << ',' << fmt(ms.S_r) << ',' << fmt(ms.S_p) << ',' << fmt(ms.S_t());
    }
    out << ',' << fmt(info::entropic_bound(3)) << '\n';
  }
}

void write_figure_csv(std::ostream& out, Axis axis, const std::vector<info::MeasureSet>& rows,
                      const RunOptions& opt) {
  write_metadata(out, "figure (vary " + to_string(axis) + ")", opt);
  out << "molecule,index";
  for (double b : opt.b_values) out << ",C_r_" << b_label(b) << ",C_p_" << b_label(b);
  out << '\n';
  for (const auto& ms : rows) {
    const int index = axis == Axis::N ? ms.qn.n : axis == Axis::L ? ms.qn.l : ms.qn.m;
    out << ms.molecule << ',' << index;
    for (double b : opt.b_values) {
      const auto& c = ms.complexity(b);
      out << ',' << fmt(c.r) << ',' << fmt(c.p);
    }
    out << '\n';
  }
}

VerifyReport verify(const std::vector<info::MeasureSet>& rows) {
  VerifyReport rep;
  for (const auto& ms : rows)
    for (auto& c : info::check_bounds(ms)) {
      if (!c.pass) ++rep.failures;
      rep.lines.push_back({ms, std::move(c)});
    }
  return rep;
}

void write_verify_report(std::ostream& out, const VerifyReport& rep, const RunOptions& opt) {
  write_metadata(out, "verify", opt);
  out << "molecule,n,l,m,bound,value,lower_bound,margin,status\n";
  for (const auto& line : rep.lines) {
    const auto& ms = line.measures;
    const auto& c = line.check;
    out << ms.molecule << ',' << ms.qn.n << ',' << ms.qn.l << ',' << ms.qn.m << ',' << c.name << ','
        << fmt(c.value) << ',' << fmt(c.bound) << ',' << fmt(c.margin) << ','
        << (c.pass ? "pass" : "FAIL") << '\n';
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "# summary: %zu checks, %d violations; entropy bound %.8f\n",
                rep.lines.size(), rep.failures, info::entropic_bound(3));
  out << buf;
}

}  // namespace gkinfo::report
