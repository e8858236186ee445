// Planar disk primitives shared by the complex builders and the oracle.
//
// Every comparison uses closed-disk semantics with one absolute tolerance on
// (non-squared) distances. Where possible the comparison is carried out on
// squared distances, with the tolerance folded into the right-hand side.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>

namespace cech {

using VertexId = std::uint32_t;

/// Raised when a caller breaks a documented precondition.
class ContractError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

struct Point
{
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Disk
{
  VertexId id = 0;
  Point center;
  double radius = 1.0;

  friend bool operator==(const Disk&, const Disk&) = default;
};

/// Absolute slack applied to every distance comparison.
struct Tolerance
{
  static constexpr double kDefaultEps = 1e-9;
  double eps = kDefaultEps;
};

/// Throws std::invalid_argument unless the point is finite.
void validate(const Point& p);
/// Throws std::invalid_argument unless the center is finite and radius > 0.
void validate(const Disk& d);

[[nodiscard]] double distance(const Point& a, const Point& b) noexcept;
[[nodiscard]] double squared_distance(const Point& a, const Point& b) noexcept;

// dist(a, b) <= ra + rb + eps. Tangent disks intersect.
[[nodiscard]] bool disks_intersect(const Disk& a, const Disk& b, Tolerance tol = {}) noexcept;

// dist(inner, outer) + r_inner <= r_outer + eps.
[[nodiscard]] bool disk_inside_disk(const Disk& inner, const Disk& outer, Tolerance tol = {}) noexcept;

// dist(p, center) <= r + eps.
[[nodiscard]] bool point_in_disk(const Point& p, const Disk& d, Tolerance tol = {}) noexcept;

enum class CircleContact
{
  Disjoint,   ///< boundaries do not meet, disks are apart
  Nested,     ///< boundaries do not meet, one disk strictly inside the other
  Tangent,    ///< one contact point
  Crossing,   ///< two contact points
  Coincident, ///< same circle within tolerance, infinitely many points
};

/// Result of intersecting two circle boundaries. Holds zero, one or two
/// points; the coincident case is reported through `contact` and carries no
/// points.
class CircleIntersection
{
public:
  CircleIntersection() = default;
  explicit CircleIntersection(CircleContact contact) : contact_(contact) {}
  CircleIntersection(Point p) : contact_(CircleContact::Tangent), points_{p, p}, count_(1) {}
  CircleIntersection(Point p, Point q) : contact_(CircleContact::Crossing), points_{p, q}, count_(2) {}

  [[nodiscard]] CircleContact contact() const noexcept { return contact_; }
  [[nodiscard]] bool coincident() const noexcept { return contact_ == CircleContact::Coincident; }
  [[nodiscard]] std::span<const Point> points() const noexcept { return {points_.data(), count_}; }
  [[nodiscard]] std::size_t size() const noexcept { return count_; }

private:
  CircleContact contact_ = CircleContact::Disjoint;
  std::array<Point, 2> points_{};
  std::size_t count_ = 0;
};

/// Intersection of the boundary circles of `a` and `b`.
///
/// Tangency within tolerance yields exactly one point, placed on the line of
/// centers. Coincident circles are flagged rather than reported as empty.
[[nodiscard]] CircleIntersection circle_intersection_points(const Disk& a, const Disk& b, Tolerance tol = {});

} // namespace cech
