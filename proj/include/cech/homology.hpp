// Mod-2 homology of a simplicial complex: boundary matrices, Betti numbers
// and vertex indices.
#pragma once

#include "cech/complex.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <vector>

namespace cech {

/// Boundary map from k-chains to (k-1)-chains over GF(2). Rows follow the
/// lexicographic order of S_{k-1}, columns that of S_k.
class BoundaryMatrix
{
public:
  BoundaryMatrix(std::size_t rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return columns_.size(); }
  [[nodiscard]] bool entry(std::size_t row, std::size_t col) const { return columns_.at(col).test(row); }
  void set(std::size_t row, std::size_t col, bool value = true) { columns_.at(col).set(row, value); }
  [[nodiscard]] const boost::dynamic_bitset<>& column(std::size_t col) const { return columns_.at(col); }

  /// Rank over GF(2) by column elimination.
  [[nodiscard]] std::size_t rank() const;
  [[nodiscard]] bool is_zero() const;

  /// Matrix product over GF(2): (*this) * rhs.
  [[nodiscard]] BoundaryMatrix operator*(const BoundaryMatrix& rhs) const;

private:
  std::size_t rows_;
  std::vector<boost::dynamic_bitset<>> columns_;
};

/// Boundary matrix of S_k -> S_{k-1}. Requires 1 <= k and level k to be known.
[[nodiscard]] BoundaryMatrix boundary_matrix(const CechComplex& cx, int k);

/// Index of a vertex, and whether it was cut off by the dimension cap (in
/// which case the true index is at least `value`).
struct VertexIndex
{
  int value = 0;
  bool at_least = false;

  friend bool operator==(const VertexIndex&, const VertexIndex&) = default;
};

/// Largest k such that for every i <= k each (i-1)-simplex containing `v` is
/// a face of some i-simplex containing `v`.
[[nodiscard]] VertexIndex vertex_index(const CechComplex& cx, VertexId v);

struct HomologyReport
{
  std::vector<std::size_t> betti;          ///< beta_0 .. beta_up_to
  std::vector<std::size_t> level_sizes;    ///< |S_0| .. |S_{up_to+1}|
  std::vector<std::size_t> ranks;          ///< rank of boundary k, k = 0 .. up_to+1 (rank 0 is 0)
  std::vector<VertexIndex> vertex_indices; ///< one entry per vertex

  friend bool operator==(const HomologyReport&, const HomologyReport&) = default;
};

/// beta_k = |S_k| - rank(boundary_k) - rank(boundary_{k+1}) for k <= up_to.
/// Throws ContractError when level up_to+1 is not known, since a truncated
/// complex would silently give the wrong answer.
[[nodiscard]] HomologyReport betti_numbers(const CechComplex& cx, int up_to);

} // namespace cech
