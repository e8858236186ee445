#pragma once

#include "cech/complex.hpp"

#include <filesystem>
#include <string>

namespace cech {

/// SVG picture of the disks and their complex: translucent disks, vertex
/// dots, edges, and 2-simplices filled darker the higher the dimension of the
/// largest simplex they belong to. Output is byte-for-byte deterministic.
[[nodiscard]] std::string render_svg(const DiskSet& ds, const CechComplex& cx);

void write_svg(const std::filesystem::path& path, const DiskSet& ds, const CechComplex& cx);

} // namespace cech
