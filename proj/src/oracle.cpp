#include "cech/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

namespace cech::oracle {

namespace {

constexpr int kSeedGrid = 16;
constexpr double kRefineFactor = 100.0;

struct Cell
{
  double cx, cy, half; // center and half side length
  double lower;        // f(center) - half diagonal
};

struct ByLowerBound
{
  bool operator()(const Cell& a, const Cell& b) const { return a.lower > b.lower; }
};

double slack(std::span<const Disk> disks, double x, double y)
{
  double worst = -std::numeric_limits<double>::infinity();
  for (const Disk& d : disks)
    worst = std::max(worst, std::hypot(x - d.center.x, y - d.center.y) - d.radius);
  return worst;
}

} // namespace

double guard_band(double resolution) noexcept
{
  return 2.0 * resolution / kRefineFactor;
}

Verdict common_point_exists(std::span<const Disk> disks, double resolution)
{
  if (disks.size() < 2)
    throw ContractError("common_point_exists: need at least two disks");
  if (!(resolution > 0.0))
    throw ContractError("common_point_exists: resolution must be > 0");

  const double step = resolution / kRefineFactor;
  const double guard = guard_band(resolution);
  const Disk& smallest =
    *std::min_element(disks.begin(), disks.end(), [](const Disk& a, const Disk& b) { return a.radius < b.radius; });

  double best = std::numeric_limits<double>::infinity();
  std::priority_queue<Cell, std::vector<Cell>, ByLowerBound> open;
  auto visit = [&](double x, double y, double half) {
    const double f = slack(disks, x, y);
    best = std::min(best, f);
    open.push(Cell{x, y, half, f - half * std::numbers::sqrt2});
  };

  const double seed_half = smallest.radius / kSeedGrid;
  const double x0 = smallest.center.x - smallest.radius;
  const double y0 = smallest.center.y - smallest.radius;
  for (int i = 0; i < kSeedGrid; ++i)
    for (int j = 0; j < kSeedGrid; ++j)
      visit(x0 + (2 * i + 1) * seed_half, y0 + (2 * j + 1) * seed_half, seed_half);

  while (!open.empty() && best > 0.0) {
    const Cell cell = open.top();
    open.pop();
    // Nothing left can improve on the best sample by more than a step, or
    // every remaining cell is provably outside some disk.
    if (cell.lower >= best - step || (cell.lower > 0.0 && best > guard))
      break;
    if (2.0 * cell.half <= step)
      continue;
    const double q = cell.half / 2.0;
    visit(cell.cx - q, cell.cy - q, q);
    visit(cell.cx + q, cell.cy - q, q);
    visit(cell.cx - q, cell.cy + q, q);
    visit(cell.cx + q, cell.cy + q, q);
  }

  Verdict v;
  v.margin = best;
  if (best <= 0.0)
    v.decision = Decision::Yes;
  else if (best > guard)
    v.decision = Decision::No;
  else
    v.decision = Decision::Inconclusive;
  return v;
}

std::vector<Disagreement> cross_check(const DiskSet& ds, const CechComplex& cx, double resolution)
{
  std::vector<Disagreement> out;
  if (ds.size() != cx.vertex_count())
    throw ContractError("cross_check: complex was not built from this disk set");

  auto judge = [&](const Simplex& s, bool in_complex) {
    std::vector<Disk> members;
    members.reserve(s.size());
    for (VertexId v : s.vertices())
      members.push_back(ds[v]);
    const Verdict verdict = common_point_exists(members, resolution);
    if (verdict.decision == Decision::Inconclusive)
      return;
    if ((verdict.decision == Decision::Yes) != in_complex)
      out.push_back({s, in_complex, verdict});
  };

  const CechComplex cliques = build_rips(ds, cx.dmax());
  for (int k = 1; k <= std::max(cx.top_dimension(), cliques.top_dimension()); ++k) {
    for (const Simplex& s : cx.level(k))
      judge(s, true);
    for (const Simplex& s : cliques.level(k))
      if (!cx.contains(s))
        judge(s, false);
  }
  return out;
}

} // namespace cech::oracle
