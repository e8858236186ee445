// Generalized Čech complex and Rips (clique) complex of a set of disks.
#pragma once

#include "cech/geometry.hpp"

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

namespace cech {

/// Disks with ids exactly 0..N-1, stored in id order.
class DiskSet
{
public:
  DiskSet() = default;
  /// Accepts disks in any order; throws std::invalid_argument when ids are
  /// not a permutation of 0..N-1 or a disk is malformed.
  explicit DiskSet(std::vector<Disk> disks);
  DiskSet(std::initializer_list<Disk> disks) : DiskSet(std::vector<Disk>(disks)) {}

  [[nodiscard]] std::size_t size() const noexcept { return disks_.size(); }
  [[nodiscard]] bool empty() const noexcept { return disks_.empty(); }
  [[nodiscard]] const Disk& operator[](VertexId id) const { return disks_.at(id); }
  [[nodiscard]] std::span<const Disk> disks() const noexcept { return disks_; }
  [[nodiscard]] auto begin() const noexcept { return disks_.begin(); }
  [[nodiscard]] auto end() const noexcept { return disks_.end(); }

  friend bool operator==(const DiskSet&, const DiskSet&) = default;

private:
  std::vector<Disk> disks_;
};

/// Strictly increasing, non-empty list of vertex ids.
class Simplex
{
public:
  Simplex() = default;
  /// Sorts the ids; throws ContractError on duplicates or an empty list.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices) : Simplex(std::vector<VertexId>(vertices)) {}

  [[nodiscard]] int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  [[nodiscard]] std::span<const VertexId> vertices() const noexcept { return vertices_; }
  [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
  [[nodiscard]] VertexId operator[](std::size_t i) const { return vertices_[i]; }
  [[nodiscard]] VertexId back() const { return vertices_.back(); }
  [[nodiscard]] bool contains(VertexId v) const noexcept;

  /// The face obtained by deleting the vertex at position `i`.
  [[nodiscard]] Simplex face_without(std::size_t i) const;
  /// This simplex plus a vertex larger than every current one.
  [[nodiscard]] Simplex extended(VertexId v) const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

private:
  struct Unchecked {};
  Simplex(std::vector<VertexId> vertices, Unchecked) : vertices_(std::move(vertices)) {}

  std::vector<VertexId> vertices_;
};

using Level = std::vector<Simplex>;

enum class ComplexKind
{
  Cech,
  Rips,
};

/// Passing this as the dimension cap builds the complex to its top dimension.
inline constexpr int kFullDimension = std::numeric_limits<int>::max();

struct BuildOptions
{
  Tolerance tol{};
  /// Worker threads used to verify candidates; 1 keeps everything on the
  /// calling thread. Output does not depend on this value.
  unsigned threads = 1;
};

/// Levels S_0..S_m of a simplicial complex plus the vertex adjacency taken
/// from S_1. Levels above the last stored one are empty. Construction stops
/// at the first empty level, so the complex is complete exactly when its top
/// non-empty level lies below the cap.
class CechComplex
{
public:
  CechComplex() = default;

  /// Wraps already-built levels. Each level must be sorted, duplicate-free
  /// and hold simplices of the right dimension; face closure is not checked
  /// (see `is_face_closed`). Trailing empty levels are dropped.
  CechComplex(std::vector<Level> levels, int dmax, ComplexKind kind = ComplexKind::Cech);

  [[nodiscard]] ComplexKind kind() const noexcept { return kind_; }
  /// Requested dimension cap.
  [[nodiscard]] int dmax() const noexcept { return dmax_; }
  /// True when construction stopped because a level came out empty, so every
  /// level above `top_dimension()` is known to be empty.
  [[nodiscard]] bool complete() const noexcept { return top_dimension() < dmax_; }
  /// Highest dimension whose contents are known (possibly empty).
  [[nodiscard]] int known_dimension() const noexcept { return complete() ? kFullDimension : dmax_; }
  /// Highest non-empty level, -1 for the empty complex.
  [[nodiscard]] int top_dimension() const noexcept { return static_cast<int>(levels_.size()) - 1; }

  [[nodiscard]] std::size_t vertex_count() const noexcept { return neighbors_.size(); }
  /// S_k; empty for any k above the stored levels.
  [[nodiscard]] const Level& level(int k) const;
  [[nodiscard]] const std::vector<Level>& levels() const noexcept { return levels_; }
  [[nodiscard]] bool contains(const Simplex& s) const;
  [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const { return neighbors_.at(v); }
  [[nodiscard]] std::size_t simplex_count() const noexcept;

  friend bool operator==(const CechComplex&, const CechComplex&) = default;

private:
  std::vector<Level> levels_;
  std::vector<std::vector<VertexId>> neighbors_;
  int dmax_ = 1;
  ComplexKind kind_ = ComplexKind::Cech;
};

/// All intersecting pairs (i, j), i < j, in lexicographic order.
[[nodiscard]] Level build_one_simplices(const DiskSet& ds, Tolerance tol = {});

enum class CandidateStatus
{
  Simplex,     ///< the disks share a point
  NotSimplex,  ///< pairwise intersecting, but no common point
  NotAdjacent, ///< some pair of disks does not intersect
};

/// Decides whether the disks named by `candidate` (dimension >= 2) share a
/// point: either the smallest disk lies inside all the others, or some
/// pairwise boundary intersection point lies inside every remaining disk.
/// A candidate with a non-intersecting pair is reported as NotAdjacent
/// without running either test.
[[nodiscard]] CandidateStatus classify_candidate(const DiskSet& ds, const Simplex& candidate, Tolerance tol = {});

/// classify_candidate(...) == CandidateStatus::Simplex.
[[nodiscard]] bool verify_candidate(const DiskSet& ds, const Simplex& candidate, Tolerance tol = {});

/// Candidate k-simplices: each (k+1)-set whose every (k-1)-face is already in
/// S_{k-1}, produced once each in lexicographic order. Needs levels up to
/// k-1 to be known.
[[nodiscard]] Level enumerate_candidates(const CechComplex& partial, int k);

/// Builds the Čech complex up to dimension `dmax` (>= 1). Stops early at the
/// first empty level.
[[nodiscard]] CechComplex build_cech(const DiskSet& ds, int dmax = 2, const BuildOptions& opts = {});

/// Builds the clique complex of the intersection graph up to `dmax`.
[[nodiscard]] CechComplex build_rips(const DiskSet& ds, int dmax = 2, const BuildOptions& opts = {});

/// Every (k-1)-face of every stored k-simplex is stored too.
[[nodiscard]] bool is_face_closed(const CechComplex& cx);

} // namespace cech
