#include "cech/run.hpp"

#include "cech/io.hpp"
#include "cech/render.hpp"

#include <algorithm>
#include <chrono>

namespace cech {

int homology_dimension(const CechComplex& cx)
{
  if (cx.dmax() != kFullDimension)
    return cx.dmax() - 1;
  return std::max(0, cx.top_dimension());
}

RunResult run(const DiskSet& ds, const RunOptions& opts, const OutputPaths& out)
{
  const auto start = std::chrono::steady_clock::now();
  CechComplex cx = opts.kind == ComplexKind::Cech ? build_cech(ds, opts.dmax, opts.build)
                                                  : build_rips(ds, opts.dmax, opts.build);
  const auto stop = std::chrono::steady_clock::now();

  RunReport report;
  report.cells = ds.size();
  report.kind = opts.kind;
  report.dmax = opts.dmax;
  report.eps = opts.build.tol.eps;
  report.construction_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  report.homology = betti_numbers(cx, homology_dimension(cx));

  if (out.complex)
    io::write_json(*out.complex, io::complex_to_json(cx));
  if (out.report)
    io::write_json(*out.report, report_to_json(report));
  if (out.svg)
    write_svg(*out.svg, ds, cx);
  return {std::move(cx), std::move(report)};
}

nlohmann::json report_to_json(const RunReport& report, bool with_timing)
{
  const HomologyReport& h = report.homology;
  nlohmann::json indices = nlohmann::json::array();
  nlohmann::json capped = nlohmann::json::array();
  for (const VertexIndex& vi : h.vertex_indices) {
    indices.push_back(vi.value);
    capped.push_back(vi.at_least);
  }

  nlohmann::json doc;
  doc["config"] = {
    {"cells", report.cells},
    {"kind", report.kind == ComplexKind::Cech ? "cech" : "rips"},
    {"dmax", report.dmax == kFullDimension ? nlohmann::json("full") : nlohmann::json(report.dmax)},
    {"eps", report.eps},
  };
  doc["level_sizes"] = h.level_sizes;
  doc["ranks"] = h.ranks;
  doc["betti"] = h.betti;
  doc["vertex_indices"] = std::move(indices);
  doc["vertex_index_at_least"] = std::move(capped);
  if (with_timing)
    doc["construction_ms"] = report.construction_ms;
  return doc;
}

} // namespace cech
