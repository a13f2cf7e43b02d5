#include "prismhull/convexity.hpp"

#include "prismhull/errors.hpp"

#include <stdexcept>
#include <string>

namespace prismhull {

namespace {

void check_inputs(const Graph& g, const DistanceMatrix& dm)
{
  if (dm.order() != g.order())
    throw std::invalid_argument("distance matrix of order " + std::to_string(dm.order())
                                + " does not belong to a graph of order "
                                + std::to_string(g.order()));
}

void check_set(const Graph& g, const VertexSet& s)
{
  if (s.universe() != g.order())
    throw std::invalid_argument("vertex set over " + std::to_string(s.universe())
                                + " vertices used with a graph of order "
                                + std::to_string(g.order()));
}

}  // namespace

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order())
{
  d_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) {
    auto row = bfs_distances(g, v);
    d_.insert(d_.end(), row.begin(), row.end());
  }
}

std::size_t DistanceMatrix::index(Vertex u, Vertex v) const
{
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw RangeError("distance query (" + std::to_string(u) + ", " + std::to_string(v)
                     + ") outside [0, " + std::to_string(n_) + ")");
  return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
}

DistanceMatrix all_pairs_distances(const Graph& g)
{
  return DistanceMatrix(g);
}

VertexSet interval_pair(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v)
{
  check_inputs(g, dm);
  const Distance duv = dm(u, v);
  VertexSet out(g.order());
  out.insert(u);
  out.insert(v);
  if (!duv.finite())
    return out;
  for (Vertex w = 0; w < g.order(); ++w) {
    const Distance duw = dm(u, w);
    const Distance dwv = dm(w, v);
    if (duw.finite() && dwv.finite() && duw.hops() + dwv.hops() == duv.hops())
      out.insert(w);
  }
  return out;
}

VertexSet interval_set(const Graph& g, const DistanceMatrix& dm, const VertexSet& s)
{
  check_inputs(g, dm);
  check_set(g, s);
  VertexSet out(g.order());
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i; j < members.size(); ++j)
      out |= interval_pair(g, dm, members[i], members[j]);
  return out;
}

HullTrace convex_hull(const Graph& g, const DistanceMatrix& dm, const VertexSet& s)
{
  check_inputs(g, dm);
  check_set(g, s);
  HullTrace trace;
  trace.steps.push_back(s);
  // Every strict step adds at least one vertex.
  for (int p = 0; p <= g.order(); ++p) {
    VertexSet next = interval_set(g, dm, trace.steps.back());
    const bool fixed = next == trace.steps.back();
    trace.steps.push_back(std::move(next));
    if (fixed) {
      trace.fixpoint_index = p;
      return trace;
    }
  }
  throw std::logic_error("interval iteration failed to reach a fixpoint within n steps");
}

bool is_convex(const Graph& g, const DistanceMatrix& dm, const VertexSet& s)
{
  return interval_set(g, dm, s) == s;
}

bool is_hull_set(const Graph& g, const DistanceMatrix& dm, const VertexSet& s)
{
  return convex_hull(g, dm, s).final_set() == g.vertices();
}

}  // namespace prismhull
