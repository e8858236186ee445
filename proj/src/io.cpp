#include "cech/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace cech::io {

namespace {

std::string_view trim(std::string_view s)
{
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_field(std::string_view text, const char* name, std::size_t line)
{
  text = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw ParseError("bad " + std::string(name) + " field '" + std::string(text) + "'", line);
  return value;
}

std::ifstream open_for_read(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot read " + path.string());
  return in;
}

} // namespace

ParseError::ParseError(const std::string& what, std::size_t line)
  : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what)
  , line_(line)
{}

DiskSet parse_disks_csv(std::istream& in)
{
  std::vector<Disk> disks;
  std::string raw;
  std::size_t line = 0;
  bool seen_record = false;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos)
      text = text.substr(0, hash);
    text = trim(text);
    if (text.empty())
      continue;

    std::array<std::string_view, 4> fields;
    std::size_t count = 0;
    while (true) {
      const auto comma = text.find(',');
      if (count == fields.size())
        throw ParseError("expected 4 fields id,x,y,r", line);
      fields[count++] = text.substr(0, comma);
      if (comma == std::string_view::npos)
        break;
      text.remove_prefix(comma + 1);
    }
    if (count != fields.size())
      throw ParseError("expected 4 fields id,x,y,r", line);
    if (!seen_record && trim(fields[0]) == "id")
      continue;
    seen_record = true;

    Disk d;
    d.id = parse_field<VertexId>(fields[0], "id", line);
    d.center.x = parse_field<double>(fields[1], "x", line);
    d.center.y = parse_field<double>(fields[2], "y", line);
    d.radius = parse_field<double>(fields[3], "r", line);
    try {
      validate(d);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line);
    }
    disks.push_back(d);
  }
  try {
    return DiskSet(std::move(disks));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

DiskSet parse_disks_json(const nlohmann::json& doc)
{
  std::vector<Disk> disks;
  try {
    for (const auto& item : doc.at("disks")) {
      Disk d;
      d.id = item.at("id").get<VertexId>();
      d.center.x = item.at("x").get<double>();
      d.center.y = item.at("y").get<double>();
      d.radius = item.at("r").get<double>();
      disks.push_back(d);
    }
    return DiskSet(std::move(disks));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("disk JSON: ") + e.what(), 0);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

DiskSet read_disks(const std::filesystem::path& path)
{
  std::ifstream in = open_for_read(path);
  in >> std::ws;
  if (path.extension() == ".json" || in.peek() == '{') {
    try {
      return parse_disks_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("disk JSON: ") + e.what(), 0);
    }
  }
  return parse_disks_csv(in);
}

void write_disks_csv(std::ostream& out, const DiskSet& ds)
{
  out << "# id,x,y,r\n";
  std::ostringstream line;
  line.precision(17);
  for (const Disk& d : ds) {
    line.str({});
    line << d.id << ',' << d.center.x << ',' << d.center.y << ',' << d.radius << '\n';
    out << line.str();
  }
}

nlohmann::json disks_to_json(const DiskSet& ds)
{
  nlohmann::json arr = nlohmann::json::array();
  for (const Disk& d : ds)
    arr.push_back({{"id", d.id}, {"x", d.center.x}, {"y", d.center.y}, {"r", d.radius}});
  return {{"disks", std::move(arr)}};
}

void write_disks(const std::filesystem::path& path, const DiskSet& ds)
{
  if (path.extension() == ".json") {
    write_json(path, disks_to_json(ds));
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  write_disks_csv(out, ds);
}

nlohmann::json complex_to_json(const CechComplex& cx)
{
  nlohmann::json levels = nlohmann::json::array();
  for (const Level& level : cx.levels()) {
    nlohmann::json simplices = nlohmann::json::array();
    for (const Simplex& s : level)
      simplices.push_back(std::vector<VertexId>(s.vertices().begin(), s.vertices().end()));
    levels.push_back(std::move(simplices));
  }
  nlohmann::json doc;
  doc["kind"] = cx.kind() == ComplexKind::Cech ? "cech" : "rips";
  doc["dmax"] = cx.dmax() == kFullDimension ? nlohmann::json("full") : nlohmann::json(cx.dmax());
  doc["levels"] = std::move(levels);
  return doc;
}

CechComplex complex_from_json(const nlohmann::json& doc)
{
  try {
    std::vector<Level> levels;
    for (const auto& lvl : doc.at("levels")) {
      Level level;
      for (const auto& s : lvl)
        level.emplace_back(s.get<std::vector<VertexId>>());
      levels.push_back(std::move(level));
    }
    const auto& dmax = doc.at("dmax");
    const int cap = dmax.is_string() && dmax.get<std::string>() == "full" ? kFullDimension : dmax.get<int>();
    const ComplexKind kind = doc.value("kind", std::string("cech")) == "rips" ? ComplexKind::Rips : ComplexKind::Cech;
    return CechComplex(std::move(levels), cap, kind);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("complex JSON: ") + e.what(), 0);
  } catch (const ContractError& e) {
    throw ParseError(std::string("complex JSON: ") + e.what(), 0);
  }
}

void write_json(const std::filesystem::path& path, const nlohmann::json& doc)
{
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

} // namespace cech::io
