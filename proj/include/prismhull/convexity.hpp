#ifndef PRISMHULL_CONVEXITY_HPP
#define PRISMHULL_CONVEXITY_HPP

#include "prismhull/distance.hpp"
#include "prismhull/graph.hpp"
#include "prismhull/vertex_set.hpp"

#include <vector>

namespace prismhull {

/// All-pairs hop distances of one graph. Immutable once built.
class DistanceMatrix
{
public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const Graph& g);

  int order() const { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return d_[index(u, v)]; }

private:
  std::size_t index(Vertex u, Vertex v) const;

  int n_ = 0;
  std::vector<Distance> d_;
};

/// One breadth-first search per vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

/**
 * Iterates of the interval operator: steps[0] = S, steps[p] = I^p[S].
 *
 * The last entry repeats steps[fixpoint_index], which is the hull.
 */
struct HullTrace
{
  std::vector<VertexSet> steps;
  int fixpoint_index = 0;

  const VertexSet& final_set() const { return steps.at(fixpoint_index); }
  int growth_steps() const { return fixpoint_index; }
};

/// Closed interval I[u,v]: u, v and every vertex on a shortest u-v path.
/// Vertices in different components give {u, v}.
VertexSet interval_pair(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v);

/// I[S], the union of I[u,v] over unordered pairs of S; I[{}] = {}.
VertexSet interval_set(const Graph& g, const DistanceMatrix& dm, const VertexSet& s);

/// Iterates interval_set from S until two consecutive iterates agree.
HullTrace convex_hull(const Graph& g, const DistanceMatrix& dm, const VertexSet& s);

bool is_convex(const Graph& g, const DistanceMatrix& dm, const VertexSet& s);
bool is_hull_set(const Graph& g, const DistanceMatrix& dm, const VertexSet& s);

}  // namespace prismhull

#endif
