#include "cech/io.hpp"
#include "cech/scenario.hpp"
#include "figures.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cech;

namespace {

std::filesystem::path scratch(const std::string& name)
{
  const auto dir = std::filesystem::temp_directory_path() / "cech_test_io";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::size_t parse_error_line(const std::string& text)
{
  std::istringstream in(text);
  try {
    (void)io::parse_disks_csv(in);
  } catch (const io::ParseError& e) {
    return e.line();
  }
  return std::string::npos;
}

} // namespace

TEST_CASE("CSV disks")
{
  std::istringstream in("# cells\n"
                        "id,x,y,r\n"
                        "\n"
                        "1, 0.9, 0, 0.485   # right\n"
                        "0,0,0,0.485\n"
                        "2,0.45,0.8,0.485\n");
  const DiskSet ds = io::parse_disks_csv(in);
  CHECK(ds == figures::rips_vs_cech());

  std::istringstream empty("# nothing here\n");
  CHECK(io::parse_disks_csv(empty).empty());
}

TEST_CASE("CSV errors carry the line number")
{
  CHECK(parse_error_line("0,0,0,1\n1,0,zero,1\n") == 2);
  CHECK(parse_error_line("# c\n0,0,0\n") == 2);
  CHECK(parse_error_line("0,0,0,1,5\n") == 1);
  CHECK(parse_error_line("0,0,0,-1\n") == 1);
  CHECK(parse_error_line("0,0,0,1\n0,1,1,1\n") == 0); // duplicate ids: whole-file error
  CHECK(parse_error_line("0,0,0,1\n") == std::string::npos);
}

TEST_CASE("JSON disks")
{
  const auto doc = nlohmann::json::parse(R"({"disks":[{"id":1,"x":1,"y":0,"r":0.5},{"id":0,"x":0,"y":0,"r":0.5}]})");
  const DiskSet ds = io::parse_disks_json(doc);
  REQUIRE(ds.size() == 2);
  CHECK(ds[1].center.x == 1.0);
  CHECK(io::parse_disks_json(io::disks_to_json(ds)) == ds);
  CHECK_THROWS_AS((void)io::parse_disks_json(nlohmann::json::parse(R"({"cells":[]})")), io::ParseError);
  CHECK_THROWS_AS((void)io::parse_disks_json(nlohmann::json::parse(R"({"disks":[{"id":0,"x":0,"y":0}]})")),
                  io::ParseError);
}

TEST_CASE("file round trip rebuilds the same complex")
{
  for (std::uint64_t seed : {3u, 4u, 5u}) {
    ScenarioConfig cfg;
    cfg.seed = seed;
    cfg.density = 1.5;
    const DiskSet ds = generate_scenario(cfg);
    for (const char* name : {"round.csv", "round.json"}) {
      const auto path = scratch(name);
      io::write_disks(path, ds);
      const DiskSet back = io::read_disks(path);
      CHECK(back == ds);
      CHECK(build_cech(back, 3) == build_cech(ds, 3));
    }
  }
}

TEST_CASE("read_disks errors")
{
  CHECK_THROWS_AS((void)io::read_disks(scratch("does-not-exist.csv")), std::runtime_error);
  const auto bad = scratch("bad.json");
  std::ofstream(bad) << "{ not json";
  CHECK_THROWS_AS((void)io::read_disks(bad), io::ParseError);
}

TEST_CASE("complex JSON")
{
  const CechComplex cx = build_cech(figures::tetrahedron_and_triangle(), 3);
  const nlohmann::json doc = io::complex_to_json(cx);
  CHECK(doc["dmax"] == 3);
  CHECK(doc["kind"] == "cech");
  CHECK(doc["levels"][3] == nlohmann::json::parse("[[0,1,2,4]]"));
  CHECK(io::complex_from_json(doc) == cx);

  const CechComplex full = build_rips(figures::rips_vs_cech(), kFullDimension);
  const nlohmann::json fdoc = io::complex_to_json(full);
  CHECK(fdoc["dmax"] == "full");
  CHECK(io::complex_from_json(fdoc) == full);

  CHECK_THROWS_AS((void)io::complex_from_json(nlohmann::json::parse(R"({"dmax":2,"levels":[[[1]]]})")),
                  io::ParseError);
}
