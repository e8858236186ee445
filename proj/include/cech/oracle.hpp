// Brute-force "do these disks share a point?" decision, independent of the
// candidate verification used by the builder. Test support only.
#pragma once

#include "cech/complex.hpp"

#include <span>
#include <vector>

namespace cech::oracle {

enum class Decision
{
  Yes,
  No,
  Inconclusive,
};

struct Verdict
{
  Decision decision = Decision::Inconclusive;
  /// Smallest sampled value of max_i(dist(p, c_i) - r_i). Non-positive means
  /// the sample point lies in every disk.
  double margin = 0.0;
};

inline constexpr double kDefaultResolution = 1e-3;

/// Minimizes f(p) = max_i(dist(p, c_i) - r_i) over the bounding box of the
/// smallest disk. A coarse grid seeds a Lipschitz branch-and-bound that
/// refines down to resolution / 100; cells whose lower bound cannot beat the
/// best sample are discarded.
///
/// Yes when some sample has f <= 0, No when the best sample exceeds the
/// guard (twice the refined step), Inconclusive in between.
[[nodiscard]] Verdict common_point_exists(std::span<const Disk> disks, double resolution = kDefaultResolution);

/// Guard band used by common_point_exists for a given resolution.
[[nodiscard]] double guard_band(double resolution) noexcept;

struct Disagreement
{
  Simplex simplex;
  bool in_complex = false;
  Verdict verdict;
};

/// Compares every simplex of dimension >= 1 in `cx`, and every clique of the
/// intersection graph up to the same cap that `cx` lacks, against
/// common_point_exists. Inconclusive verdicts are skipped.
[[nodiscard]] std::vector<Disagreement> cross_check(const DiskSet& ds, const CechComplex& cx,
                                                    double resolution = kDefaultResolution);

} // namespace cech::oracle
