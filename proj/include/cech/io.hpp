// Disk-set and complex file formats.
//
// Disk CSV: one `id,x,y,r` record per line. Blank lines and text after `#`
// are ignored; an optional `id,x,y,r` header line is accepted.
// Disk JSON: {"disks":[{"id":0,"x":0.0,"y":0.0,"r":1.0}, ...]}
// Complex JSON: {"kind":"cech","dmax":2,"levels":[[[0],[1]],[[0,1]]]}
#pragma once

#include "cech/complex.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace cech::io {

/// Malformed input. `line()` is 1-based, or 0 when no line applies.
class ParseError : public std::runtime_error
{
public:
  ParseError(const std::string& what, std::size_t line);
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

[[nodiscard]] DiskSet parse_disks_csv(std::istream& in);
[[nodiscard]] DiskSet parse_disks_json(const nlohmann::json& doc);

/// Reads CSV or JSON, chosen by a `.json` extension or a leading `{`.
[[nodiscard]] DiskSet read_disks(const std::filesystem::path& path);

void write_disks_csv(std::ostream& out, const DiskSet& ds);
[[nodiscard]] nlohmann::json disks_to_json(const DiskSet& ds);
/// Writes CSV unless the path ends in `.json`.
void write_disks(const std::filesystem::path& path, const DiskSet& ds);

[[nodiscard]] nlohmann::json complex_to_json(const CechComplex& cx);
[[nodiscard]] CechComplex complex_from_json(const nlohmann::json& doc);

void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

} // namespace cech::io
