// Construction-time sweep over deployment density and dimension cap.
#pragma once

#include "cech/scenario.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace cech {

struct BenchmarkConfig
{
  std::vector<double> densities{1.0, 1.5, 2.0};
  std::vector<int> dmax_values{2, 10};
  int repeats = 10;
  /// Each scenario is built this many times and the fastest build is kept.
  int timing_runs = 3;
  std::uint64_t seed = 1;
  ScenarioConfig base{}; ///< region and radii; density, seed and dmax are overridden
  BuildOptions build{};
};

/// One timed construction.
struct BenchmarkSample
{
  double density = 0.0;
  int dmax = 0;
  int repeat = 0;
  std::size_t cells = 0;     ///< N
  double mean_degree = 0.0;  ///< n, average neighbors per cell
  double ms = 0.0;
};

/// Aggregate per (density, dmax).
struct BenchmarkRow
{
  double density = 0.0;
  int dmax = 0;
  double mean_cells = 0.0;
  double mean_ms = 0.0;
  double stddev_ms = 0.0;
};

struct BenchmarkResult
{
  std::vector<BenchmarkSample> samples;
  std::vector<BenchmarkRow> rows;
};

/// For every density and cap, times `repeats` scenarios. Repeat r uses
/// scenario seed `seed + r`, so every cap at a given density sees the same
/// deployments. A sample's time is the fastest of `timing_runs` builds.
[[nodiscard]] BenchmarkResult benchmark(const BenchmarkConfig& cfg);

/// density,dmax,n_cells,mean_ms,stddev_ms
void write_benchmark_csv(std::ostream& out, const BenchmarkResult& result);
/// density,dmax,repeat,n_cells,mean_degree,ms
void write_samples_csv(std::ostream& out, const BenchmarkResult& result);

} // namespace cech
