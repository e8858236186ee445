// Command-line front end: scenario generation, complex construction,
// rendering, benchmarking and oracle cross-checks.
#include "cech/bench.hpp"
#include "cech/io.hpp"
#include "cech/oracle.hpp"
#include "cech/render.hpp"
#include "cech/run.hpp"
#include "cech/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct Flags
{
  cech::ScenarioConfig scenario;
  std::string dmax = "2";
  double eps = cech::Tolerance::kDefaultEps;
  unsigned threads = 1;
  std::string input;
  std::string out_disks;
  std::string out_complex;
  std::string out_report;
  std::string out_svg;
  std::string out_csv;
  std::string out_samples;
  double resolution = cech::oracle::kDefaultResolution;
  std::vector<double> densities{1.0, 1.5, 2.0};
  std::vector<int> bench_dmax{2, 10};
  int repeats = 10;
  int timing_runs = 3;
};

void add_scenario_flags(CLI::App* cmd, Flags& f)
{
  cmd->add_option("--density", f.scenario.density, "Expected cells per unit area");
  cmd->add_option("--width", f.scenario.width, "Region width");
  cmd->add_option("--height", f.scenario.height, "Region height");
  cmd->add_option("--rmin", f.scenario.radius_min, "Smallest cell radius");
  cmd->add_option("--rmax", f.scenario.radius_max, "Largest cell radius");
  cmd->add_option("--seed", f.scenario.seed, "Scenario seed");
}

void add_build_flags(CLI::App* cmd, Flags& f)
{
  cmd->add_option("--input", f.input, "Disk file (id,x,y,r CSV or JSON); a scenario is generated when absent");
  cmd->add_option("--dmax", f.dmax, "Dimension cap, or 'full'")->capture_default_str();
  cmd->add_option("--eps", f.eps, "Distance tolerance")->capture_default_str();
  cmd->add_option("--threads", f.threads, "Verification threads")->capture_default_str();
}

int parse_dmax(const std::string& text)
{
  if (text == "full")
    return cech::kFullDimension;
  std::size_t used = 0;
  const int value = std::stoi(text, &used);
  if (used != text.size() || value < 1)
    throw std::invalid_argument("--dmax must be an integer >= 1 or 'full'");
  return value;
}

cech::DiskSet load(const Flags& f)
{
  if (!f.input.empty())
    return cech::io::read_disks(f.input);
  return cech::generate_scenario(f.scenario);
}

template <typename T>
std::optional<T> opt_path(const std::string& s)
{
  return s.empty() ? std::nullopt : std::optional<T>(s);
}

void print_summary(const cech::RunReport& r)
{
  std::cout << (r.kind == cech::ComplexKind::Cech ? "cech" : "rips") << " complex, " << r.cells << " cells\n";
  std::cout << "levels:";
  for (auto n : r.homology.level_sizes)
    std::cout << ' ' << n;
  std::cout << "\nbetti:";
  for (auto b : r.homology.betti)
    std::cout << ' ' << b;
  std::cout << "\nconstruction_ms: " << r.construction_ms << '\n';
}

int do_build(const Flags& f, cech::ComplexKind kind)
{
  const cech::DiskSet ds = load(f);
  cech::RunOptions opts;
  opts.dmax = parse_dmax(f.dmax);
  opts.kind = kind;
  opts.build.tol.eps = f.eps;
  opts.build.threads = f.threads;
  cech::OutputPaths out{opt_path<std::filesystem::path>(f.out_complex), opt_path<std::filesystem::path>(f.out_report),
                        opt_path<std::filesystem::path>(f.out_svg)};
  print_summary(cech::run(ds, opts, out).report);
  return 0;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Generalized Čech complexes of planar disks"};
  app.require_subcommand(1);
  Flags f;

  auto* generate = app.add_subcommand("generate", "Draw a Poisson deployment of cells");
  add_scenario_flags(generate, f);
  generate->add_option("--out", f.out_disks, "Output disk file (.csv or .json)")->required();

  auto* build = app.add_subcommand("build", "Build the Čech complex and report its homology");
  auto* rips = app.add_subcommand("rips", "Build the Rips complex and report its homology");
  for (auto* cmd : {build, rips}) {
    add_scenario_flags(cmd, f);
    add_build_flags(cmd, f);
    cmd->add_option("--out-complex", f.out_complex, "Complex JSON output");
    cmd->add_option("--out-report", f.out_report, "Report JSON output");
    cmd->add_option("--out-svg", f.out_svg, "SVG figure output");
  }

  auto* render = app.add_subcommand("render", "Draw disks and their Čech complex as SVG");
  add_scenario_flags(render, f);
  add_build_flags(render, f);
  render->add_option("--out-svg", f.out_svg, "SVG output")->required();

  auto* bench = app.add_subcommand("bench", "Time construction over densities and caps");
  add_scenario_flags(bench, f);
  bench->add_option("--densities", f.densities, "Densities to sweep")->capture_default_str();
  bench->add_option("--dmax", f.bench_dmax, "Dimension caps to sweep")->capture_default_str();
  bench->add_option("--repeats", f.repeats, "Scenarios per point")->capture_default_str();
  bench->add_option("--timing-runs", f.timing_runs, "Builds per scenario, fastest kept")->capture_default_str();
  bench->add_option("--eps", f.eps, "Distance tolerance");
  bench->add_option("--threads", f.threads, "Verification threads");
  bench->add_option("--out-csv", f.out_csv, "Summary CSV (stdout when absent)");
  bench->add_option("--out-samples", f.out_samples, "Per-run CSV");

  auto* crosscheck = app.add_subcommand("crosscheck", "Compare the Čech complex against a brute-force oracle");
  add_scenario_flags(crosscheck, f);
  add_build_flags(crosscheck, f);
  crosscheck->add_option("--resolution", f.resolution, "Oracle grid resolution")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      const cech::DiskSet ds = cech::generate_scenario(f.scenario);
      cech::io::write_disks(f.out_disks, ds);
      std::cout << "wrote " << ds.size() << " cells to " << f.out_disks << '\n';
    } else if (*build) {
      return do_build(f, cech::ComplexKind::Cech);
    } else if (*rips) {
      return do_build(f, cech::ComplexKind::Rips);
    } else if (*render) {
      const cech::DiskSet ds = load(f);
      cech::BuildOptions opts{cech::Tolerance{f.eps}, f.threads};
      cech::write_svg(f.out_svg, ds, cech::build_cech(ds, parse_dmax(f.dmax), opts));
      std::cout << "wrote " << f.out_svg << '\n';
    } else if (*bench) {
      cech::BenchmarkConfig cfg;
      cfg.densities = f.densities;
      cfg.dmax_values = f.bench_dmax;
      cfg.repeats = f.repeats;
      cfg.timing_runs = f.timing_runs;
      cfg.seed = f.scenario.seed;
      cfg.base = f.scenario;
      cfg.build = cech::BuildOptions{cech::Tolerance{f.eps}, f.threads};
      const cech::BenchmarkResult result = cech::benchmark(cfg);
      if (f.out_csv.empty()) {
        cech::write_benchmark_csv(std::cout, result);
      } else {
        std::ofstream out(f.out_csv);
        if (!out)
          throw std::runtime_error("cannot write " + f.out_csv);
        cech::write_benchmark_csv(out, result);
      }
      if (!f.out_samples.empty()) {
        std::ofstream out(f.out_samples);
        if (!out)
          throw std::runtime_error("cannot write " + f.out_samples);
        cech::write_samples_csv(out, result);
      }
    } else if (*crosscheck) {
      const cech::DiskSet ds = load(f);
      const cech::CechComplex cx =
        cech::build_cech(ds, parse_dmax(f.dmax), cech::BuildOptions{cech::Tolerance{f.eps}, f.threads});
      const auto disagreements = cech::oracle::cross_check(ds, cx, f.resolution);
      for (const auto& d : disagreements) {
        std::cout << (d.in_complex ? "in complex, oracle says no:" : "missing, oracle says yes:");
        for (auto v : d.simplex.vertices())
          std::cout << ' ' << v;
        std::cout << " (margin " << d.verdict.margin << ")\n";
      }
      std::cout << cx.simplex_count() << " simplices checked, " << disagreements.size() << " disagreements\n";
      return disagreements.empty() ? 0 : 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
