#include "cech/homology.hpp"
#include "cech/scenario.hpp"
#include "figures.hpp"
#include "random_instances.hpp"

#include <doctest.h>

#include <numeric>

using namespace cech;

namespace {

std::size_t components(const DiskSet& ds)
{
  std::vector<std::size_t> parent(ds.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = ds.size();
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j)
      if (disks_intersect(ds[static_cast<VertexId>(i)], ds[static_cast<VertexId>(j)])) {
        const auto a = find(i), b = find(j);
        if (a != b) {
          parent[a] = b;
          --count;
        }
      }
  return count;
}

// Same product, computed entry by entry from the definition.
bool naive_product_is_zero(const BoundaryMatrix& a, const BoundaryMatrix& b)
{
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      bool acc = false;
      for (std::size_t m = 0; m < a.cols(); ++m)
        acc ^= a.entry(i, m) && b.entry(m, j);
      if (acc)
        return false;
    }
  return true;
}

} // namespace

TEST_CASE("boundary_matrix")
{
  SUBCASE("a segment has its two endpoints as boundary")
  {
    const CechComplex cx = build_cech(DiskSet{{0, {0, 0}, 1}, {1, {1, 0}, 1}}, 1);
    const BoundaryMatrix m = boundary_matrix(cx, 1);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 1);
    CHECK(m.entry(0, 0));
    CHECK(m.entry(1, 0));
  }

  SUBCASE("a filled triangle is bounded by its three segments")
  {
    const CechComplex cx = build_cech(DiskSet{{0, {0, 0}, 1}, {1, {1, 0}, 1}, {2, {0.5, 0.5}, 1}}, 2);
    const BoundaryMatrix m = boundary_matrix(cx, 2);
    REQUIRE(m.rows() == 3);
    REQUIRE(m.cols() == 1);
    for (std::size_t r = 0; r < 3; ++r)
      CHECK(m.entry(r, 0));
  }

  SUBCASE("a boundary has no boundary on the tetrahedron figure")
  {
    const CechComplex cx = build_cech(figures::tetrahedron_and_triangle(), kFullDimension);
    for (int k = 2; k <= cx.top_dimension(); ++k) {
      const BoundaryMatrix lower = boundary_matrix(cx, k - 1);
      const BoundaryMatrix upper = boundary_matrix(cx, k);
      CHECK(naive_product_is_zero(lower, upper));
      CHECK((lower * upper).is_zero());
    }
    // Every column of boundary k has k+1 ones.
    for (int k = 1; k <= cx.top_dimension(); ++k) {
      const BoundaryMatrix m = boundary_matrix(cx, k);
      for (std::size_t c = 0; c < m.cols(); ++c)
        CHECK(m.column(c).count() == static_cast<std::size_t>(k + 1));
    }
  }

  SUBCASE("errors")
  {
    const CechComplex capped = build_cech(figures::tetrahedron_and_triangle(), 2);
    CHECK_THROWS_AS((void)boundary_matrix(capped, 3), ContractError);
    CHECK_THROWS_AS((void)boundary_matrix(capped, 0), ContractError);
    const CechComplex open({Level{{0}, {1}, {2}}, Level{{0, 1}}, Level{{0, 1, 2}}}, 2);
    CHECK_THROWS_AS((void)boundary_matrix(open, 2), ContractError);
  }
}

TEST_CASE("GF(2) rank")
{
  BoundaryMatrix m(3, 3);
  m.set(0, 0);
  m.set(1, 0);
  m.set(1, 1);
  m.set(2, 1);
  m.set(0, 2);
  m.set(2, 2); // third column = first + second
  CHECK(m.rank() == 2);
  CHECK(BoundaryMatrix(4, 0).rank() == 0);
  CHECK(BoundaryMatrix(0, 4).rank() == 0);
}

TEST_CASE("betti numbers of the figures")
{
  auto betti = [](const DiskSet& ds, int dmax) { return betti_numbers(build_cech(ds, dmax), 1).betti; };
  CHECK(betti(figures::rips_vs_cech(), 2) == std::vector<std::size_t>{1, 1});
  CHECK(betti(figures::hole_and_triangle(), 2) == std::vector<std::size_t>{1, 1});
  CHECK(betti(figures::tetrahedron_and_triangle(), 2) == std::vector<std::size_t>{1, 0});
  CHECK(betti(figures::three_triangles(), 2) == std::vector<std::size_t>{1, 0});
  CHECK(betti_numbers(build_rips(figures::rips_vs_cech(), 2), 1).betti == std::vector<std::size_t>{1, 0});

  const HomologyReport r = betti_numbers(build_cech(figures::tetrahedron_and_triangle(), kFullDimension), 3);
  CHECK(r.level_sizes == std::vector<std::size_t>{5, 8, 5, 1, 0});
  CHECK(r.betti == std::vector<std::size_t>{1, 0, 0, 0});
  CHECK(r.ranks.front() == 0);

  SUBCASE("empty complex")
  {
    const HomologyReport e = betti_numbers(build_cech(DiskSet{}, 2), 1);
    CHECK(e.betti == std::vector<std::size_t>{0, 0});
    CHECK(e.vertex_indices.empty());
  }

  SUBCASE("truncated complex is refused")
  {
    CHECK_THROWS_AS((void)betti_numbers(build_cech(figures::tetrahedron_and_triangle(), 2), 2), ContractError);
    // A complex that stopped early knows its higher levels are empty.
    CHECK(betti_numbers(build_cech(figures::rips_vs_cech(), 2), 3).betti ==
          std::vector<std::size_t>{1, 1, 0, 0});
  }
}

TEST_CASE("vertex indices")
{
  auto indices = [](const DiskSet& ds) {
    const CechComplex cx = build_cech(ds, kFullDimension);
    std::vector<int> out;
    for (VertexId v = 0; v < cx.vertex_count(); ++v) {
      const VertexIndex vi = vertex_index(cx, v);
      CHECK_FALSE(vi.at_least);
      out.push_back(vi.value);
    }
    return out;
  };
  CHECK(indices(figures::tetrahedron_and_triangle()) == std::vector<int>{3, 3, 2, 2, 2});
  CHECK(indices(figures::three_triangles()) == std::vector<int>{2, 2, 2, 2, 2});
  CHECK(indices(figures::hole_and_triangle()) == std::vector<int>{1, 1, 1, 2, 1});
  CHECK(indices(DiskSet{{0, {0, 0}, 1}, {1, {5, 0}, 1}}) == std::vector<int>{0, 0});

  SUBCASE("cap makes the value a lower bound")
  {
    const CechComplex capped = build_cech(figures::tetrahedron_and_triangle(), 2);
    CHECK(vertex_index(capped, 0) == VertexIndex{2, true});
    CHECK(vertex_index(capped, 3) == VertexIndex{2, true});
    const CechComplex capped3 = build_cech(figures::tetrahedron_and_triangle(), 3);
    CHECK(vertex_index(capped3, 0) == VertexIndex{3, true});
    CHECK(vertex_index(capped3, 3) == VertexIndex{2, false});
  }

  CHECK_THROWS_AS((void)vertex_index(build_cech(figures::rips_vs_cech(), 2), 3), ContractError);
}

TEST_CASE("homology properties on random deployments")
{
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    ScenarioConfig cfg;
    cfg.seed = seed;
    cfg.density = 0.5;
    const DiskSet ds = generate_scenario(cfg);
    const CechComplex cx = build_cech(ds, kFullDimension);
    const int top = std::max(0, cx.top_dimension());
    const HomologyReport r = betti_numbers(cx, top);
    CAPTURE(seed);

    CHECK(r.betti[0] == components(ds));
    for (int k = 2; k <= top; ++k)
      CHECK(r.betti[static_cast<std::size_t>(k)] == 0);

    long euler_cells = 0, euler_betti = 0;
    for (int k = 0; k <= top; ++k) {
      const long sign = k % 2 ? -1 : 1;
      euler_cells += sign * static_cast<long>(r.level_sizes[static_cast<std::size_t>(k)]);
      euler_betti += sign * static_cast<long>(r.betti[static_cast<std::size_t>(k)]);
    }
    CHECK(euler_cells == euler_betti);

    for (int k = 2; k <= cx.top_dimension(); ++k)
      CHECK((boundary_matrix(cx, k - 1) * boundary_matrix(cx, k)).is_zero());

    std::mt19937_64 rng(seed);
    const auto perm = testing::random_permutation(rng, ds.size());
    CHECK(betti_numbers(build_cech(testing::relabel(ds, perm), kFullDimension), top).betti == r.betti);
  }
}
