// End-to-end construction runs: build a complex, compute its homology,
// write the requested outputs.
#pragma once

#include "cech/complex.hpp"
#include "cech/homology.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>

namespace cech {

struct RunOptions
{
  int dmax = 2; ///< kFullDimension builds to the top dimension
  ComplexKind kind = ComplexKind::Cech;
  BuildOptions build{};
};

struct OutputPaths
{
  std::optional<std::filesystem::path> complex;
  std::optional<std::filesystem::path> report;
  std::optional<std::filesystem::path> svg;
};

struct RunReport
{
  std::size_t cells = 0;
  ComplexKind kind = ComplexKind::Cech;
  int dmax = 2;
  double eps = Tolerance::kDefaultEps;
  HomologyReport homology;
  double construction_ms = 0.0; ///< wall clock around construction only
};

struct RunResult
{
  CechComplex complex;
  RunReport report;
};

/// Highest Betti dimension reported: dmax - 1, or the top dimension for an
/// uncapped build.
[[nodiscard]] int homology_dimension(const CechComplex& cx);

[[nodiscard]] RunResult run(const DiskSet& ds, const RunOptions& opts, const OutputPaths& out = {});

/// JSON form of a report. `with_timing = false` drops the timing field,
/// leaving a value fully determined by the input and flags.
[[nodiscard]] nlohmann::json report_to_json(const RunReport& report, bool with_timing = true);

} // namespace cech
