#include "cech/homology.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cech {

BoundaryMatrix::BoundaryMatrix(std::size_t rows, std::size_t cols)
  : rows_(rows)
  , columns_(cols, boost::dynamic_bitset<>(rows))
{}

std::size_t BoundaryMatrix::rank() const
{
  // Reduce columns so that each surviving column has a distinct lowest set
  // bit; the surviving count is the rank.
  std::vector<boost::dynamic_bitset<>> pivots(rows_);
  std::vector<bool> has_pivot(rows_, false);
  std::size_t rank = 0;
  for (auto col : columns_) {
    while (col.any()) {
      const std::size_t low = col.find_first();
      if (!has_pivot[low]) {
        pivots[low] = std::move(col);
        has_pivot[low] = true;
        ++rank;
        break;
      }
      col ^= pivots[low];
    }
  }
  return rank;
}

bool BoundaryMatrix::is_zero() const
{
  return std::none_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.any(); });
}

BoundaryMatrix BoundaryMatrix::operator*(const BoundaryMatrix& rhs) const
{
  if (cols() != rhs.rows())
    throw ContractError("BoundaryMatrix product: inner dimensions differ");
  BoundaryMatrix out(rows_, rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    const auto& picked = rhs.columns_[j];
    for (auto i = picked.find_first(); i != boost::dynamic_bitset<>::npos; i = picked.find_next(i))
      out.columns_[j] ^= columns_[i];
  }
  return out;
}

BoundaryMatrix boundary_matrix(const CechComplex& cx, int k)
{
  if (k < 1)
    throw ContractError("boundary_matrix: dimension must be >= 1");
  if (k > cx.known_dimension())
    throw ContractError("boundary_matrix: level " + std::to_string(k) + " was not built");

  const Level& faces = cx.level(k - 1);
  const Level& cells = cx.level(k);
  BoundaryMatrix m(faces.size(), cells.size());
  for (std::size_t j = 0; j < cells.size(); ++j) {
    for (std::size_t i = 0; i < cells[j].size(); ++i) {
      const Simplex f = cells[j].face_without(i);
      const auto it = std::lower_bound(faces.begin(), faces.end(), f);
      if (it == faces.end() || *it != f)
        throw ContractError("boundary_matrix: complex is not closed under faces");
      m.set(static_cast<std::size_t>(it - faces.begin()), j);
    }
  }
  return m;
}

VertexIndex vertex_index(const CechComplex& cx, VertexId v)
{
  if (v >= cx.vertex_count())
    throw ContractError("vertex_index: unknown vertex " + std::to_string(v));

  auto containing = [&](int k) {
    std::vector<const Simplex*> out;
    for (const Simplex& s : cx.level(k))
      if (s.contains(v))
        out.push_back(&s);
    return out;
  };

  std::vector<const Simplex*> lower = containing(0);
  for (int i = 1;; ++i) {
    if (i > cx.known_dimension())
      return {i - 1, true};
    std::vector<const Simplex*> upper = containing(i);

    // Faces of the i-simplices at v that still contain v.
    std::set<Simplex> covered;
    for (const Simplex* s : upper)
      for (std::size_t j = 0; j < s->size(); ++j)
        if ((*s)[j] != v)
          covered.insert(s->face_without(j));

    const bool holds =
      std::all_of(lower.begin(), lower.end(), [&](const Simplex* f) { return covered.contains(*f); });
    if (!holds)
      return {i - 1, false};
    lower = std::move(upper);
  }
}

HomologyReport betti_numbers(const CechComplex& cx, int up_to)
{
  if (up_to < 0)
    throw ContractError("betti_numbers: dimension must be >= 0");
  if (up_to + 1 > cx.known_dimension())
    throw ContractError("betti_numbers: need level " + std::to_string(up_to + 1) + " but the complex is capped at " +
                        std::to_string(cx.dmax()));

  HomologyReport report;
  const auto top = static_cast<std::size_t>(up_to);
  report.ranks.push_back(0);
  for (int k = 0; k <= up_to + 1; ++k) {
    report.level_sizes.push_back(cx.level(k).size());
    if (k >= 1)
      report.ranks.push_back(boundary_matrix(cx, k).rank());
  }
  for (std::size_t k = 0; k <= top; ++k)
    report.betti.push_back(report.level_sizes[k] - report.ranks[k] - report.ranks[k + 1]);
  for (VertexId v = 0; v < cx.vertex_count(); ++v)
    report.vertex_indices.push_back(vertex_index(cx, v));
  return report;
}

} // namespace cech
