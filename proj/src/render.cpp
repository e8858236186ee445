#include "cech/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <stdexcept>

namespace cech {

namespace {

constexpr double kPixelsPerUnit = 100.0;
constexpr double kMargin = 0.25;
constexpr std::array<const char*, 5> kShades{"#9ecae1", "#6baed6", "#4292c6", "#2171b5", "#08519c"};

std::string num(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Largest dimension of a simplex having the triangle as a face.
std::map<Simplex, int> triangle_depth(const CechComplex& cx)
{
  std::map<Simplex, int> depth;
  for (int k = 2; k <= cx.top_dimension(); ++k) {
    for (const Simplex& s : cx.level(k)) {
      const auto v = s.vertices();
      for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b)
          for (std::size_t c = b + 1; c < v.size(); ++c) {
            int& d = depth[Simplex{v[a], v[b], v[c]}];
            d = std::max(d, k);
          }
    }
  }
  return depth;
}

} // namespace

std::string render_svg(const DiskSet& ds, const CechComplex& cx)
{
  if (ds.size() != cx.vertex_count())
    throw ContractError("render_svg: complex was not built from this disk set");

  double min_x = 0.0, min_y = 0.0, max_x = 1.0, max_y = 1.0;
  if (!ds.empty()) {
    min_x = min_y = std::numeric_limits<double>::infinity();
    max_x = max_y = -std::numeric_limits<double>::infinity();
    for (const Disk& d : ds) {
      min_x = std::min(min_x, d.center.x - d.radius);
      min_y = std::min(min_y, d.center.y - d.radius);
      max_x = std::max(max_x, d.center.x + d.radius);
      max_y = std::max(max_y, d.center.y + d.radius);
    }
  }
  min_x -= kMargin;
  min_y -= kMargin;
  max_x += kMargin;
  max_y += kMargin;
  const double width = (max_x - min_x) * kPixelsPerUnit;
  const double height = (max_y - min_y) * kPixelsPerUnit;
  auto px = [&](const Point& p) { return num((p.x - min_x) * kPixelsPerUnit); };
  auto py = [&](const Point& p) { return num((max_y - p.y) * kPixelsPerUnit); };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(width) + ' ' + num(height) + "\">\n";
  svg += "<rect class=\"canvas\" x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" fill=\"#ffffff\"/>\n";

  for (const Disk& d : ds)
    svg += "<circle class=\"disk\" cx=\"" + px(d.center) + "\" cy=\"" + py(d.center) + "\" r=\"" +
           num(d.radius * kPixelsPerUnit) + "\" fill=\"#3182bd\" fill-opacity=\"0.15\" stroke=\"#3182bd\"/>\n";

  for (const auto& [tri, depth] : triangle_depth(cx)) {
    const char* shade = kShades[static_cast<std::size_t>(std::min<int>(depth - 2, kShades.size() - 1))];
    svg += "<polygon class=\"simplex\" data-dim=\"" + std::to_string(depth) + "\" points=\"";
    for (std::size_t i = 0; i < 3; ++i) {
      const Point& c = ds[tri[i]].center;
      svg += (i ? " " : "") + px(c) + ',' + py(c);
    }
    svg += "\" fill=\"" + std::string(shade) + "\" fill-opacity=\"0.6\"/>\n";
  }

  for (const Simplex& e : cx.level(1)) {
    const Point& a = ds[e[0]].center;
    const Point& b = ds[e[1]].center;
    svg += "<line class=\"edge\" x1=\"" + px(a) + "\" y1=\"" + py(a) + "\" x2=\"" + px(b) + "\" y2=\"" + py(b) +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  }

  for (const Disk& d : ds)
    svg += "<circle class=\"vertex\" cx=\"" + px(d.center) + "\" cy=\"" + py(d.center) +
           "\" r=\"2.5\" fill=\"#000000\"/>\n";

  svg += "</svg>\n";
  return svg;
}

void write_svg(const std::filesystem::path& path, const DiskSet& ds, const CechComplex& cx)
{
  const std::string svg = render_svg(ds, cx);
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  out << svg;
  if (!out)
    throw std::runtime_error("failed writing " + path.string());
}

} // namespace cech
