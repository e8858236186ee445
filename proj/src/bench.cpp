#include "cech/bench.hpp"

#include <chrono>
#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <vector>

namespace cech {

BenchmarkResult benchmark(const BenchmarkConfig& cfg)
{
  BenchmarkResult result;
  if (cfg.repeats <= 0)
    return result;

  // Repeats are the outer loop so that slow drift in machine speed is spread
  // evenly over every (density, cap) cell instead of biasing the later ones.
  struct Cell {
    double density;
    int dmax;
  };
  std::vector<Cell> cells;
  for (double density : cfg.densities)
    for (int dmax : cfg.dmax_values)
      cells.push_back({density, dmax});
  std::vector<std::vector<BenchmarkSample>> per_cell(cells.size());

  for (int r = 0; r < cfg.repeats; ++r) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      ScenarioConfig sc = cfg.base;
      sc.density = cells[c].density;
      sc.dmax = cells[c].dmax;
      sc.seed = cfg.seed + static_cast<std::uint64_t>(r);
      const DiskSet ds = generate_scenario(sc);

      CechComplex cx;
      double fastest = std::numeric_limits<double>::infinity();
      for (int t = 0; t < std::max(1, cfg.timing_runs); ++t) {
        const auto start = std::chrono::steady_clock::now();
        cx = build_cech(ds, sc.dmax, cfg.build);
        const auto stop = std::chrono::steady_clock::now();
        fastest = std::min(fastest, std::chrono::duration<double, std::milli>(stop - start).count());
      }

      BenchmarkSample s;
      s.density = sc.density;
      s.dmax = sc.dmax;
      s.repeat = r;
      s.cells = ds.size();
      s.mean_degree = ds.empty() ? 0.0 : 2.0 * static_cast<double>(cx.level(1).size()) / static_cast<double>(ds.size());
      s.ms = fastest;
      per_cell[c].push_back(s);
    }
  }

  const double count = cfg.repeats;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    BenchmarkRow row;
    row.density = cells[c].density;
    row.dmax = cells[c].dmax;
    for (const BenchmarkSample& s : per_cell[c]) {
      row.mean_cells += static_cast<double>(s.cells) / count;
      row.mean_ms += s.ms / count;
    }
    double spread = 0.0;
    for (const BenchmarkSample& s : per_cell[c])
      spread += std::pow(s.ms - row.mean_ms, 2);
    row.stddev_ms = cfg.repeats > 1 ? std::sqrt(spread / (count - 1.0)) : 0.0;
    result.rows.push_back(row);
    result.samples.insert(result.samples.end(), per_cell[c].begin(), per_cell[c].end());
  }
  return result;
}

void write_benchmark_csv(std::ostream& out, const BenchmarkResult& result)
{
  out << "density,dmax,n_cells,mean_ms,stddev_ms\n";
  for (const BenchmarkRow& r : result.rows)
    out << r.density << ',' << r.dmax << ',' << r.mean_cells << ',' << r.mean_ms << ',' << r.stddev_ms << '\n';
}

void write_samples_csv(std::ostream& out, const BenchmarkResult& result)
{
  out << "density,dmax,repeat,n_cells,mean_degree,ms\n";
  for (const BenchmarkSample& s : result.samples)
    out << s.density << ',' << s.dmax << ',' << s.repeat << ',' << s.cells << ',' << s.mean_degree << ',' << s.ms
        << '\n';
}

} // namespace cech
