#include "cech/complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

namespace cech {

// ---------------------------------------------------------------------------
// DiskSet / Simplex

DiskSet::DiskSet(std::vector<Disk> disks) : disks_(std::move(disks))
{
  std::sort(disks_.begin(), disks_.end(), [](const Disk& a, const Disk& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < disks_.size(); ++i) {
    validate(disks_[i]);
    if (disks_[i].id != i)
      throw std::invalid_argument("disk ids must be exactly 0.." + std::to_string(disks_.size() - 1) +
                                  " without duplicates (offending id " + std::to_string(disks_[i].id) + ")");
  }
}

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices))
{
  if (vertices_.empty())
    throw ContractError("a simplex needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw ContractError("simplex vertices must be distinct");
}

bool Simplex::contains(VertexId v) const noexcept
{
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Simplex Simplex::face_without(std::size_t i) const
{
  if (vertices_.size() < 2)
    throw ContractError("a 0-simplex has no non-empty faces");
  std::vector<VertexId> rest;
  rest.reserve(vertices_.size() - 1);
  for (std::size_t j = 0; j < vertices_.size(); ++j)
    if (j != i)
      rest.push_back(vertices_[j]);
  return Simplex(std::move(rest), Unchecked{});
}

Simplex Simplex::extended(VertexId v) const
{
  if (!vertices_.empty() && v <= vertices_.back())
    throw ContractError("extended: new vertex must exceed every existing vertex");
  std::vector<VertexId> more;
  more.reserve(vertices_.size() + 1);
  more.assign(vertices_.begin(), vertices_.end());
  more.push_back(v);
  return Simplex(std::move(more), Unchecked{});
}

// ---------------------------------------------------------------------------
// CechComplex

CechComplex::CechComplex(std::vector<Level> levels, int dmax, ComplexKind kind)
  : levels_(std::move(levels))
  , dmax_(dmax)
  , kind_(kind)
{
  if (dmax_ < 1)
    throw ContractError("dimension cap must be >= 1");
  while (!levels_.empty() && levels_.back().empty())
    levels_.pop_back();
  if (top_dimension() > dmax_)
    throw ContractError("complex holds simplices above its dimension cap");

  for (std::size_t k = 0; k < levels_.size(); ++k) {
    const Level& level = levels_[k];
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (level[i].dimension() != static_cast<int>(k))
        throw ContractError("level " + std::to_string(k) + " holds a simplex of dimension " +
                            std::to_string(level[i].dimension()));
      if (i > 0 && !(level[i - 1] < level[i]))
        throw ContractError("level " + std::to_string(k) + " is not strictly sorted");
    }
  }

  const Level& vertices = level(0);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i][0] != i)
      throw ContractError("vertex level must be exactly 0..N-1");
  neighbors_.resize(vertices.size());
  for (const Simplex& edge : level(1)) {
    if (edge.back() >= vertices.size())
      throw ContractError("edge references unknown vertex " + std::to_string(edge.back()));
    neighbors_[edge[0]].push_back(edge[1]);
    neighbors_[edge[1]].push_back(edge[0]);
  }
  for (auto& adj : neighbors_)
    std::sort(adj.begin(), adj.end());
}

const Level& CechComplex::level(int k) const
{
  static const Level kEmpty;
  if (k < 0 || k >= static_cast<int>(levels_.size()))
    return kEmpty;
  return levels_[static_cast<std::size_t>(k)];
}

bool CechComplex::contains(const Simplex& s) const
{
  const Level& lvl = level(s.dimension());
  return std::binary_search(lvl.begin(), lvl.end(), s);
}

std::size_t CechComplex::simplex_count() const noexcept
{
  std::size_t total = 0;
  for (const auto& lvl : levels_)
    total += lvl.size();
  return total;
}

bool is_face_closed(const CechComplex& cx)
{
  for (int k = 1; k <= cx.top_dimension(); ++k)
    for (const Simplex& s : cx.level(k))
      for (std::size_t i = 0; i < s.size(); ++i)
        if (!cx.contains(s.face_without(i)))
          return false;
  return true;
}

// ---------------------------------------------------------------------------
// Construction

Level build_one_simplices(const DiskSet& ds, Tolerance tol)
{
  Level edges;
  const auto n = static_cast<VertexId>(ds.size());
  for (VertexId i = 0; i + 1 < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (disks_intersect(ds[i], ds[j], tol))
        edges.push_back(Simplex{i, j});
  return edges;
}

CandidateStatus classify_candidate(const DiskSet& ds, const Simplex& candidate, Tolerance tol)
{
  if (candidate.dimension() < 2)
    throw ContractError("classify_candidate: candidate dimension must be >= 2");
  const std::size_t m = candidate.size();
  std::vector<const Disk*> cells(m);
  for (std::size_t i = 0; i < m; ++i)
    cells[i] = &ds[candidate[i]];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!disks_intersect(*cells[i], *cells[j], tol))
        return CandidateStatus::NotAdjacent;

  // Smallest cell; ties go to the lowest id, which is the earliest position.
  std::size_t smallest = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (cells[i]->radius < cells[smallest]->radius)
      smallest = i;

  bool inside_all = true;
  for (std::size_t i = 0; i < m && inside_all; ++i)
    if (i != smallest)
      inside_all = disk_inside_disk(*cells[smallest], *cells[i], tol);
  if (inside_all)
    return CandidateStatus::Simplex;

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const CircleIntersection meet = circle_intersection_points(*cells[i], *cells[j], tol);
      for (const Point& p : meet.points()) {
        bool covered = true;
        for (std::size_t t = 0; t < m && covered; ++t)
          if (t != i && t != j)
            covered = point_in_disk(p, *cells[t], tol);
        if (covered)
          return CandidateStatus::Simplex;
      }
    }
  }
  return CandidateStatus::NotSimplex;
}

bool verify_candidate(const DiskSet& ds, const Simplex& candidate, Tolerance tol)
{
  return classify_candidate(ds, candidate, tol) == CandidateStatus::Simplex;
}

namespace {

using Adjacency = std::vector<std::vector<VertexId>>;

bool level_contains(const Level& level, const Simplex& s)
{
  return std::binary_search(level.begin(), level.end(), s);
}

// Extends each simplex of `prev` by a higher-id neighbor of its last vertex
// and keeps the extension when all of its other faces are in `prev`.
Level extend_level(const Level& prev, const Adjacency& adjacency)
{
  Level out;
  for (const Simplex& base : prev) {
    const auto& adj = adjacency[base.back()];
    for (auto it = std::upper_bound(adj.begin(), adj.end(), base.back()); it != adj.end(); ++it) {
      Simplex cand = base.extended(*it);
      // The face dropping the new vertex is `base` itself.
      bool faces_present = true;
      for (std::size_t i = 0; i + 1 < cand.size() && faces_present; ++i)
        faces_present = level_contains(prev, cand.face_without(i));
      if (faces_present)
        out.push_back(std::move(cand));
    }
  }
  return out;
}

Adjacency adjacency_of(std::size_t n, const Level& edges)
{
  Adjacency adj(n);
  for (const Simplex& e : edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& a : adj)
    std::sort(a.begin(), a.end());
  return adj;
}

} // namespace

Level enumerate_candidates(const CechComplex& partial, int k)
{
  if (k < 1)
    throw ContractError("enumerate_candidates: target dimension must be >= 1");
  if (k - 1 > partial.known_dimension())
    throw ContractError("enumerate_candidates: level " + std::to_string(k - 1) + " has not been built");
  return extend_level(partial.level(k - 1), adjacency_of(partial.vertex_count(), partial.level(1)));
}

namespace {

template <typename Accept>
Level filter_candidates(const Level& candidates, unsigned threads, const Accept& accept)
{
  std::vector<char> keep(candidates.size(), 0);
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, candidates.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i)
      keep[i] = accept(candidates[i]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < candidates.size(); i += workers)
          keep[i] = accept(candidates[i]);
      });
  }

  Level out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i])
      out.push_back(candidates[i]);
  return out;
}

template <typename Accept>
CechComplex build_levels(const DiskSet& ds, int dmax, const BuildOptions& opts, ComplexKind kind,
                         const Accept& accept)
{
  if (dmax < 1)
    throw ContractError("dimension cap must be >= 1");

  std::vector<Level> levels;
  Level vertices;
  vertices.reserve(ds.size());
  for (const Disk& d : ds)
    vertices.push_back(Simplex{d.id});
  levels.push_back(std::move(vertices));
  levels.push_back(build_one_simplices(ds, opts.tol));

  const Adjacency adjacency = adjacency_of(ds.size(), levels[1]);
  for (int k = 2; k <= dmax && !levels.back().empty(); ++k) {
    Level accepted = filter_candidates(extend_level(levels.back(), adjacency), opts.threads, accept);
    if (accepted.empty())
      break;
    levels.push_back(std::move(accepted));
  }
  return CechComplex(std::move(levels), dmax, kind);
}

} // namespace

CechComplex build_cech(const DiskSet& ds, int dmax, const BuildOptions& opts)
{
  return build_levels(ds, dmax, opts, ComplexKind::Cech,
                      [&](const Simplex& s) { return verify_candidate(ds, s, opts.tol); });
}

CechComplex build_rips(const DiskSet& ds, int dmax, const BuildOptions& opts)
{
  return build_levels(ds, dmax, opts, ComplexKind::Rips, [](const Simplex&) { return true; });
}

} // namespace cech
