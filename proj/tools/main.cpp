// covfix-run: batch driver for the covering-reduction experiments.
//
// Loads OR-Library instances (or generates random ones), runs the selected
// reduction procedures against a supplied or computed upper bound, and writes
// a results table, per-run traces, timing data, and SVG charts into --out.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <glob.h>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covfix/dre.hpp"
#include "covfix/greedy.hpp"
#include "covfix/oracle.hpp"
#include "covfix/orlib.hpp"
#include "covfix/pipeline.hpp"
#include "covfix/report.hpp"
#include "covfix/sls.hpp"

namespace fs = std::filesystem;
using namespace covfix;

namespace {

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("COVFIX_LOG");
    return env ? std::atoi(env) : 1;
  }();
  return level;
}

void log(int level, const std::string& msg) {
  if (log_level() >= level) std::cerr << "covfix-run: " << msg << "\n";
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string sanitize(const std::string& name) {
  std::string out = name;
  for (char& c : out) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '.') c = '_';
  }
  return out;
}

std::vector<fs::path> expand_globs(const std::vector<std::string>& patterns) {
  std::vector<fs::path> paths;
  for (const auto& pattern : patterns) {
    glob_t g{};
    const int rc = glob(pattern.c_str(), GLOB_ERR, nullptr, &g);
    if (rc == 0) {
      for (size_t i = 0; i < g.gl_pathc; ++i) paths.emplace_back(g.gl_pathv[i]);
    } else if (rc != GLOB_NOMATCH) {
      globfree(&g);
      throw std::runtime_error("glob failed for pattern: " + pattern);
    }
    globfree(&g);
    if (rc == GLOB_NOMATCH) log(1, "pattern matched nothing: " + pattern);
  }
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  return paths;
}

void write_trace_csv(const fs::path& path, const RunTrace& trace) {
  std::ofstream out(path, std::ios::binary);
  CsvWriter csv(out);
  csv.write_row({"iteration", "outer_iteration", "iter_in_solve", "zeta", "cum_fixed",
                 "gap_percent"});
  for (const auto& pt : trace.points) {
    csv.write_row({std::to_string(pt.global_index), std::to_string(pt.outer_iteration),
                   std::to_string(pt.iter_in_solve), num(pt.zeta), std::to_string(pt.cum_fixed),
                   num(pt.gap_percent)});
  }
}

void write_trace_chart(const fs::path& path, const std::string& title, const RunTrace& trace) {
  ChartSeries fixed{"cumulative fixed", {}, false};
  ChartSeries gap{"gap %", {}, true};
  for (const auto& pt : trace.points) {
    fixed.points.emplace_back(static_cast<double>(pt.global_index),
                              static_cast<double>(pt.cum_fixed));
    gap.points.emplace_back(static_cast<double>(pt.global_index), pt.gap_percent);
  }
  std::ofstream out(path, std::ios::binary);
  write_line_chart(out, title, "simplex iteration", {fixed, gap});
}

void write_outer_bars(const fs::path& path, const std::string& instance,
                      const std::vector<const SuiteRow*>& iterative_rows) {
  int max_outer = 0;
  for (const auto* row : iterative_rows) {
    max_outer = std::max(max_outer, static_cast<int>(row->result.fixes_per_outer.size()));
  }
  if (max_outer == 0) return;
  std::vector<std::string> groups;
  for (int i = 1; i <= max_outer; ++i) groups.push_back(std::to_string(i));
  std::vector<ChartSeries> series;
  for (const auto* row : iterative_rows) {
    ChartSeries s{display_name(row->result.procedure), {}, false};
    for (size_t i = 0; i < row->result.fixes_per_outer.size(); ++i) {
      s.points.emplace_back(static_cast<double>(i + 1),
                            static_cast<double>(row->result.fixes_per_outer[i]));
    }
    series.push_back(std::move(s));
  }
  std::ofstream out(path, std::ios::binary);
  write_bar_chart(out, instance + ": variables fixed per outer iteration", "outer iteration",
                  groups, series);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set-covering reduction harness"};

  std::vector<std::string> instance_globs;
  std::string ub_file;
  std::string ub_mode;
  std::vector<std::string> procedure_flags;
  std::string out_dir = "out";
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string generate_family;
  SlsParams sls;
  std::string pricing = "dantzig";
  double tol_feas = SolverConfig{}.eps_feas;

  app.add_option("--instances", instance_globs, "Glob patterns of OR-Library instance files");
  auto* ub_file_opt = app.add_option("--ub-file", ub_file, "UB sidecar file (lines: name value)");
  app.add_option("--ub", ub_mode, "UB source when no file is given")
      ->check(CLI::IsMember({"greedy", "exact"}))
      ->excludes(ub_file_opt);
  app.add_option("--procedures", procedure_flags,
                 "Comma-separated subset of rcf,dpf,irc,idpf,sf (default: all)")
      ->delimiter(',');
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--seed", seed, "Generator seed");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--generate", generate_family, "Generate instances instead of, or in addition "
                                                "to, loading them (family: sls)")
      ->check(CLI::IsMember({"sls"}));
  app.add_option("--n", sls.n, "Generator: candidate sites");
  app.add_option("--nu", sls.nu, "Generator: network nodes (0 = 0.3n)");
  app.add_option("--rmin", sls.r_min, "Generator: minimum radius");
  app.add_option("--rmax", sls.r_max, "Generator: maximum radius");
  app.add_option("--pricing", pricing, "Simplex pricing rule")
      ->check(CLI::IsMember({"dantzig", "bland"}));
  app.add_option("--tol-feas", tol_feas, "Dual feasibility tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    SolverConfig cfg;
    cfg.eps_feas = tol_feas;
    cfg.pricing = pricing == "bland" ? Pricing::Bland : Pricing::Dantzig;

    std::vector<Procedure> procedures;
    if (procedure_flags.empty()) {
      procedures = all_procedures();
    } else {
      for (const auto& flag : procedure_flags) {
        auto p = parse_procedure(flag);
        if (!p) throw std::runtime_error("unknown procedure: " + flag);
        procedures.push_back(*p);
      }
    }

    fs::create_directories(out_dir);

    std::vector<SuiteItem> items;
    for (const auto& path : expand_globs(instance_globs)) {
      log(2, "loading " + path.string());
      items.push_back({path.stem().string(), parse_orlib_file(path)});
    }
    if (generate_family == "sls") {
      sls.seed = seed;
      GeneratedInstance gen = generate(sls);
      if (gen.discarded_rows > 0) {
        log(1, "generator discarded " + std::to_string(gen.discarded_rows) +
               " empty-coverage rows");
      }
      const std::string name = "sls_n" + std::to_string(sls.n) + "_s" + std::to_string(seed);
      write_orlib_file(gen.instance, fs::path(out_dir) / (name + ".scp"));
      items.push_back({name, std::move(gen.instance)});
    }
    if (items.empty()) throw std::runtime_error("no instances to run");

    // Inputs are usually assumed free of dominated rows; check instead of
    // trusting that, since DRE is sensitive to the starting matrix.
    for (const auto& item : items) {
      const auto dominated = dominated_rows(item.instance);
      if (!dominated.empty()) {
        log(1, item.name + ": input has " + std::to_string(dominated.size()) +
               " dominated rows (they will be eliminated)");
      }
    }

    UbTable ubs;
    if (!ub_file.empty()) {
      ubs = parse_ub_table_file(ub_file);
    } else {
      for (const auto& item : items) {
        if (ub_mode == "exact") {
          ubs.values[item.name] = oracle::exact_optimum(item.instance).value;
        } else {
          ubs.values[item.name] = greedy_ub(item.instance).value;
        }
        log(2, item.name + ": ub = " + num(ubs.values[item.name]));
      }
    }
    for (const auto& item : items) {
      if (!ubs.contains(item.name)) {
        throw Error(ErrorCode::MissingUb, "no UB entry for " + item.name);
      }
    }

    std::ofstream results_out(fs::path(out_dir) / "results.csv", std::ios::binary);
    std::ofstream timings_out(fs::path(out_dir) / "timings.csv", std::ios::binary);
    CsvWriter results(results_out);
    CsvWriter timings(timings_out);
    results.write_row({"instance", "procedure", "n0", "m0", "n_final", "m_final", "outer_iters",
                       "fixed0", "fixed1"});
    timings.write_row({"instance", "procedure", "wall_ms"});

    auto emit = [&](const SuiteRow& row) {
      const ProcedureResult& r = row.result;
      results.write_row({row.instance, display_name(r.procedure), std::to_string(row.n0),
                         std::to_string(row.m0), std::to_string(r.n_final),
                         std::to_string(r.m_final), std::to_string(r.outer_iterations),
                         std::to_string(r.fixed0), std::to_string(r.fixed1)});
      timings.write_row({row.instance, display_name(r.procedure),
                         std::to_string(r.wall_time.count())});
      results_out.flush();
      timings_out.flush();
      const std::string base = sanitize(row.instance) + "_" + flag_name(r.procedure);
      if (!r.trace.points.empty()) {
        write_trace_csv(fs::path(out_dir) / ("trace_" + base + ".csv"), r.trace);
        write_trace_chart(fs::path(out_dir) / ("fig_" + base + ".svg"),
                          row.instance + ": " + display_name(r.procedure), r.trace);
      }
    };

    std::vector<SuiteRow> rows;
    if (jobs <= 1) {
      for (const auto& item : items) {
        for (Procedure proc : procedures) {
          log(1, item.name + ": " + display_name(proc));
          SuiteRow row;
          row.instance = item.name;
          row.n0 = item.instance.n_cols;
          row.m0 = item.instance.n_rows;
          row.result = run_procedure(item.instance, ubs.at(item.name), proc, cfg, 1);
          emit(row);
          rows.push_back(std::move(row));
        }
      }
    } else {
      rows = run_suite(items, ubs, procedures, cfg, jobs);
      for (const auto& row : rows) emit(row);
    }

    for (const auto& item : items) {
      std::vector<const SuiteRow*> iterative;
      for (const auto& row : rows) {
        if (row.instance != item.name) continue;
        if (row.result.procedure == Procedure::IterRcfDre ||
            row.result.procedure == Procedure::IterDpfDre) {
          iterative.push_back(&row);
        }
      }
      if (!iterative.empty()) {
        write_outer_bars(fs::path(out_dir) / ("bars_" + sanitize(item.name) + ".svg"), item.name,
                         iterative);
      }
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "covfix-run: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "covfix-run: error: " << e.what() << "\n";
    return 3;
  }
}
