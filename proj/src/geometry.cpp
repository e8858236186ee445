#include "cech/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cech {

void validate(const Point& p)
{
  if (!std::isfinite(p.x) || !std::isfinite(p.y))
    throw std::invalid_argument("point coordinates must be finite");
}

void validate(const Disk& d)
{
  validate(d.center);
  if (!std::isfinite(d.radius) || d.radius <= 0.0)
    throw std::invalid_argument("disk " + std::to_string(d.id) + ": radius must be finite and > 0");
}

double squared_distance(const Point& a, const Point& b) noexcept
{
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double distance(const Point& a, const Point& b) noexcept
{
  return std::hypot(a.x - b.x, a.y - b.y);
}

bool disks_intersect(const Disk& a, const Disk& b, Tolerance tol) noexcept
{
  const double reach = a.radius + b.radius + tol.eps;
  return squared_distance(a.center, b.center) <= reach * reach;
}

bool disk_inside_disk(const Disk& inner, const Disk& outer, Tolerance tol) noexcept
{
  const double slack = outer.radius + tol.eps - inner.radius;
  if (slack < 0.0)
    return false;
  return squared_distance(inner.center, outer.center) <= slack * slack;
}

bool point_in_disk(const Point& p, const Disk& d, Tolerance tol) noexcept
{
  const double reach = d.radius + tol.eps;
  return squared_distance(p, d.center) <= reach * reach;
}

CircleIntersection circle_intersection_points(const Disk& a, const Disk& b, Tolerance tol)
{
  if (a.id == b.id)
    throw ContractError("circle_intersection_points: disks share id " + std::to_string(a.id));

  const double dx = b.center.x - a.center.x;
  const double dy = b.center.y - a.center.y;
  const double d = std::hypot(dx, dy);
  const double radius_gap = std::abs(a.radius - b.radius);

  if (d <= tol.eps && radius_gap <= tol.eps)
    return CircleIntersection(CircleContact::Coincident);

  const double outer_gap = d - (a.radius + b.radius);
  const double inner_gap = radius_gap - d;
  if (outer_gap > tol.eps)
    return CircleIntersection(CircleContact::Disjoint);
  if (inner_gap > tol.eps || d <= tol.eps)
    return CircleIntersection(CircleContact::Nested);

  // Distance from a's center, along the center line, to the chord through
  // the intersection points. (ra^2 - rb^2) is factored to limit cancellation.
  const double along = ((a.radius - b.radius) * (a.radius + b.radius) + d * d) / (2.0 * d);
  const double ux = dx / d;
  const double uy = dy / d;
  const Point foot{a.center.x + along * ux, a.center.y + along * uy};

  if (std::abs(outer_gap) <= tol.eps || std::abs(inner_gap) <= tol.eps)
    return CircleIntersection(foot);

  const double half_chord = std::sqrt(std::max(0.0, a.radius * a.radius - along * along));
  if (half_chord <= tol.eps)
    return CircleIntersection(foot);
  return CircleIntersection(Point{foot.x - half_chord * uy, foot.y + half_chord * ux},
                            Point{foot.x + half_chord * uy, foot.y - half_chord * ux});
}

} // namespace cech
