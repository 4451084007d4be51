// heosc -- four-dimensional harmonic-oscillator model of the helium atom.
//
// Subcommands:
//   solve     single (n1, n2, n3) intersection solve
//   sweep     quantum-number sweep to CSV
//   surfaces  radius-surface grid dump for plotting
//   verify    regression against tabulated reference values

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "heosc/constants.hpp"
#include "heosc/solver.hpp"
#include "heosc/tables.hpp"

namespace {

using heosc::FixtureEntry;
using heosc::Solution;
using heosc::SolverOptions;
using heosc::SweepRecord;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoIntersection = 2;

json solution_json(const Solution& sol) {
  return json{
      {"n1", sol.quantum_numbers.n1},
      {"n2", sol.quantum_numbers.n2},
      {"n3", sol.quantum_numbers.n3},
      {"cos_theta", sol.config.cos_theta},
      {"tan_alpha", sol.config.tan_alpha},
      {"r_bohr", sol.r},
      {"energy_hartree", sol.energy_hartree},
      {"residual", sol.residual},
      {"iterations", sol.iterations},
      {"converged", sol.converged},
  };
}

void print_solution_text(const Solution& sol, bool ev_angstrom) {
  using heosc::constants::bohr_radius_angstrom;
  using heosc::constants::hartree_ev;
  std::cout << "n         = (" << heosc::format_double(sol.quantum_numbers.n1)
            << ", " << heosc::format_double(sol.quantum_numbers.n2) << ", "
            << heosc::format_double(sol.quantum_numbers.n3) << ")\n";
  std::cout << "cos_theta = " << heosc::format_double(sol.config.cos_theta)
            << "\n";
  std::cout << "tan_alpha = " << heosc::format_double(sol.config.tan_alpha)
            << "\n";
  if (ev_angstrom) {
    std::cout << "r         = "
              << heosc::format_double(sol.r * bohr_radius_angstrom)
              << " Angstrom\n";
    std::cout << "energy    = "
              << heosc::format_double(sol.energy_hartree * hartree_ev)
              << " eV\n";
  } else {
    std::cout << "r         = " << heosc::format_double(sol.r) << " a\n";
    std::cout << "energy    = " << heosc::format_double(sol.energy_hartree)
              << " hartree\n";
  }
  std::cout << "residual  = " << heosc::format_double(sol.residual) << "\n";
  std::cout << "iterations= " << sol.iterations << "\n";
  std::cout << "converged = " << (sol.converged ? "true" : "false") << "\n";
}

int cmd_solve(double n1, double n2, double n3, const SolverOptions& opts,
              const std::string& format, const std::string& units) {
  const Solution sol =
      heosc::solve_intersection(heosc::validate_quantum_numbers(n1, n2, n3),
                                opts);
  if (format == "json") {
    std::cout << solution_json(sol).dump() << "\n";
  } else if (format == "csv") {
    std::cout << "n1,n2,n3,cos_theta,tan_alpha,r_bohr,energy_hartree,residual,"
                 "iterations,converged\n";
    const SweepRecord r = heosc::record_of(sol);
    std::cout << heosc::format_double(r.n1) << ',' << heosc::format_double(r.n2)
              << ',' << heosc::format_double(r.n3) << ','
              << heosc::format_double(r.cos_theta) << ','
              << heosc::format_double(r.tan_alpha) << ','
              << heosc::format_double(r.r_bohr) << ','
              << heosc::format_double(r.energy_hartree) << ','
              << heosc::format_double(r.residual) << ',' << sol.iterations
              << ',' << (r.converged ? "true" : "false") << '\n';
  } else {
    print_solution_text(sol, units == "ev-angstrom");
  }
  if (!sol.converged) {
    std::cerr << "no intersection: residual "
              << heosc::format_double(sol.residual)
              << " above tolerance (status "
              << static_cast<int>(sol.status) << ")\n";
    return kExitNoIntersection;
  }
  return kExitOk;
}

int cmd_sweep(const std::string& range_text, const std::string& out_path,
              const std::string& report, const SolverOptions& opts) {
  const heosc::SweepRange range = heosc::parse_sweep_range(range_text);
  for (double v : range.values()) {
    heosc::validate_quantum_numbers(v, v, v);  // reject invalid axes up front
  }
  const std::vector<SweepRecord> rows = heosc::run_sweep(range, opts);

  auto emit = [&](std::ostream& out) {
    if (report == "json") {
      json arr = json::array();
      for (const SweepRecord& r : rows) {
        arr.push_back(json{{"n1", r.n1},
                           {"n2", r.n2},
                           {"n3", r.n3},
                           {"cos_theta", r.cos_theta},
                           {"tan_alpha", r.tan_alpha},
                           {"r_bohr", r.r_bohr},
                           {"energy_hartree", r.energy_hartree},
                           {"residual", r.residual},
                           {"converged", r.converged}});
      }
      out << arr.dump() << "\n";
    } else {
      heosc::write_sweep_csv(out, rows);
    }
  };

  if (out_path.empty() || out_path == "-") {
    emit(std::cout);
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output path '" << out_path << "'\n";
    return kExitUsage;
  }
  emit(out);
  return kExitOk;
}

int cmd_surfaces(double n1, double n2, double n3, int grid) {
  const heosc::QuantumNumbers n = heosc::validate_quantum_numbers(n1, n2, n3);
  heosc::SearchDomain domain = heosc::global_domain;
  domain.resolution = grid;

  std::cout << "cos_theta,tan_alpha,s1,s2,s3,residual\n";
  for (int i = 0; i < grid; ++i) {
    const double c = domain.cos_lo +
                     (domain.cos_hi - domain.cos_lo) * i / (grid - 1);
    for (int j = 0; j < grid; ++j) {
      const double t = domain.tan_lo +
                       (domain.tan_hi - domain.tan_lo) * j / (grid - 1);
      const heosc::SurfaceSample s =
          heosc::sample_surfaces(heosc::make_config(c, t), n);
      std::cout << heosc::format_double(c) << ',' << heosc::format_double(t);
      for (int k = 0; k < 3; ++k) {
        std::cout << ',';
        if (s.radii[k]) std::cout << heosc::format_double(*s.radii[k]);
      }
      std::cout << ',';
      if (s.residual) std::cout << heosc::format_double(*s.residual);
      std::cout << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& fixtures_path, const std::string& report,
               const SolverOptions& opts) {
  std::vector<FixtureEntry> entries;
  if (fixtures_path.empty()) {
    entries = heosc::embedded_fixtures();
  } else {
    std::ifstream in(fixtures_path);
    if (!in) {
      std::cerr << "cannot open fixtures file '" << fixtures_path << "'\n";
      return kExitUsage;
    }
    try {
      entries = heosc::parse_fixtures(in);
    } catch (const std::runtime_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  const heosc::VerifyReport rep = heosc::run_fixtures(entries, opts);
  if (report == "json") {
    json arr = json::array();
    for (const heosc::FixtureResult& r : rep.results) {
      arr.push_back(json{{"n1", r.entry.n1},
                         {"n2", r.entry.n2},
                         {"n3", r.entry.n3},
                         {"quantity", heosc::quantity_name(r.entry.quantity)},
                         {"expected", r.entry.value},
                         {"computed", r.computed},
                         {"deviation", r.deviation},
                         {"passed", r.passed}});
    }
    std::cout << arr.dump() << "\n";
  } else {
    for (const heosc::FixtureResult& r : rep.results) {
      std::cout << (r.passed ? "PASS" : "FAIL") << "  ("
                << heosc::format_double(r.entry.n1) << ", "
                << heosc::format_double(r.entry.n2) << ", "
                << heosc::format_double(r.entry.n3) << ") "
                << heosc::quantity_name(r.entry.quantity) << ": expected "
                << heosc::format_double(r.entry.value) << ", computed "
                << heosc::format_double(r.computed) << ", deviation "
                << heosc::format_double(r.deviation) << "\n";
    }
    std::cout << (rep.all_passed ? "all fixtures passed"
                                 : "fixture failures present")
              << " (" << rep.results.size() << " entries)\n";
  }
  return rep.all_passed ? kExitOk : kExitNoIntersection;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Four-dimensional harmonic-oscillator model of helium: electron "
      "geometry and energies as the intersection of three radius surfaces"};
  app.require_subcommand(1);

  SolverOptions opts;
  double n1 = 0, n2 = 0, n3 = 0;
  std::string format = "text";
  std::string units = "au";
  std::string range_text = "0.5:5:0.5";
  std::string out_path;
  std::string fixtures_path;
  std::string report = "text";
  std::string sweep_report = "csv";
  int surfaces_grid = 200;

  const std::string units_help =
      "Units for text output: au (r in Bohr radii, E in hartree) or "
      "ev-angstrom. Some published tabulations of this model label r in "
      "Angstrom although the values are Bohr-radius multiples; the canonical "
      "key r_bohr always carries Bohr radii.";

  CLI::App* solve = app.add_subcommand("solve", "Solve one (n1, n2, n3) triple");
  solve->add_option("--n1", n1, "First quantum number")->required();
  solve->add_option("--n2", n2, "Second quantum number")->required();
  solve->add_option("--n3", n3, "Third quantum number")->required();
  solve->add_option("--grid", opts.resolution, "Grid nodes per axis")
      ->capture_default_str();
  solve->add_option("--max-iters", opts.max_iterations, "Refinement scan cap")
      ->capture_default_str();
  solve->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  solve->add_option("--units", units, units_help)
      ->check(CLI::IsMember({"au", "ev-angstrom"}))
      ->capture_default_str();

  CLI::App* sweep = app.add_subcommand("sweep", "Sweep quantum-number triples");
  sweep->add_option("--range", range_text,
                    "start:stop:step applied to each quantum number")
      ->capture_default_str();
  sweep->add_option("--out", out_path, "Output path (default stdout)");
  sweep->add_option("--report", sweep_report, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep->add_option("--grid", opts.resolution, "Grid nodes per axis")
      ->capture_default_str();
  sweep->add_option("--max-iters", opts.max_iterations, "Refinement scan cap")
      ->capture_default_str();

  CLI::App* surfaces =
      app.add_subcommand("surfaces", "Dump the three radius surfaces as CSV");
  surfaces->add_option("--n1", n1, "First quantum number")->required();
  surfaces->add_option("--n2", n2, "Second quantum number")->required();
  surfaces->add_option("--n3", n3, "Third quantum number")->required();
  surfaces->add_option("--grid", surfaces_grid, "Grid nodes per axis")
      ->capture_default_str();

  CLI::App* verify =
      app.add_subcommand("verify", "Regression-check tabulated fixtures");
  verify->add_option("--fixtures", fixtures_path,
                     "Fixture CSV (default: embedded reference set)");
  verify->add_option("--report", report, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify->add_option("--grid", opts.resolution, "Grid nodes per axis")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      return app.exit(e);
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(n1, n2, n3, opts, format, units);
    if (sweep->parsed()) return cmd_sweep(range_text, out_path, sweep_report, opts);
    if (surfaces->parsed()) return cmd_surfaces(n1, n2, n3, surfaces_grid);
    if (verify->parsed()) return cmd_verify(fixtures_path, report, opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoIntersection;
  }
  return kExitUsage;
}
