// Random cell deployments: a homogeneous Poisson point process on a
// rectangle with independently drawn radii.
#pragma once

#include "cech/complex.hpp"

#include <cstdint>
#include <random>

namespace cech {

struct ScenarioConfig
{
  double width = 6.0;
  double height = 6.0;
  double density = 1.0; ///< expected cells per unit area
  double radius_min = 0.5;
  double radius_max = 1.0;
  std::uint64_t seed = 1;
  int dmax = 2;

  /// Throws std::invalid_argument naming the first offending field.
  void validate() const;
};

/// Portable random stream for scenarios.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. On top of it:
///   uniform()    = (next() >> 11) * 2^-53, a double in [0, 1)
///   poisson(m)   = m split into chunks of at most 256; for each chunk c,
///                  Knuth's product method: count draws until the running
///                  product of uniform() values falls to <= exp(-c)
/// A scenario draws the cell count first, then x, y, r for each cell in id
/// order, with x = width * u, y = height * u, r = rmin + (rmax - rmin) * u.
class ScenarioRng
{
public:
  explicit ScenarioRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  std::uint64_t poisson(double mean);

private:
  std::mt19937_64 engine_;
};

[[nodiscard]] DiskSet generate_scenario(const ScenarioConfig& cfg);

} // namespace cech
