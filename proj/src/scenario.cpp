#include "cech/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cech {

namespace {

constexpr double kPoissonChunk = 256.0;

void require(bool ok, const char* field, const char* what)
{
  if (!ok)
    throw std::invalid_argument(std::string("invalid scenario: ") + field + " " + what);
}

} // namespace

void ScenarioConfig::validate() const
{
  require(std::isfinite(width) && width > 0.0, "width", "must be finite and > 0");
  require(std::isfinite(height) && height > 0.0, "height", "must be finite and > 0");
  require(std::isfinite(density) && density > 0.0, "density", "must be finite and > 0");
  require(std::isfinite(radius_min) && radius_min > 0.0, "radius_min", "must be finite and > 0");
  require(std::isfinite(radius_max) && radius_max >= radius_min, "radius_max", "must be finite and >= radius_min");
  require(dmax >= 1, "dmax", "must be >= 1");
}

std::uint64_t ScenarioRng::poisson(double mean)
{
  if (!(mean >= 0.0) || !std::isfinite(mean))
    throw std::invalid_argument("poisson mean must be finite and >= 0");
  std::uint64_t count = 0;
  while (mean > 0.0) {
    const double chunk = std::min(mean, kPoissonChunk);
    mean -= chunk;
    const double limit = std::exp(-chunk);
    double product = uniform();
    while (product > limit) {
      ++count;
      product *= uniform();
    }
  }
  return count;
}

DiskSet generate_scenario(const ScenarioConfig& cfg)
{
  cfg.validate();
  ScenarioRng rng(cfg.seed);
  const std::uint64_t n = rng.poisson(cfg.density * cfg.width * cfg.height);
  std::vector<Disk> disks;
  disks.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    Disk d;
    d.id = static_cast<VertexId>(i);
    d.center.x = cfg.width * rng.uniform();
    d.center.y = cfg.height * rng.uniform();
    d.radius = cfg.radius_min + (cfg.radius_max - cfg.radius_min) * rng.uniform();
    disks.push_back(d);
  }
  return DiskSet(std::move(disks));
}

} // namespace cech
