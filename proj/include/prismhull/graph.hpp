#ifndef PRISMHULL_GRAPH_HPP
#define PRISMHULL_GRAPH_HPP

#include "prismhull/distance.hpp"
#include "prismhull/vertex_set.hpp"

#include <span>
#include <utility>
#include <vector>

namespace prismhull {

using Edge = std::pair<Vertex, Vertex>;

/**
 * Finite simple undirected graph on vertices 0..n-1.
 *
 * Adjacency rows are bitsets, so complement and neighbourhood algebra are
 * word operations. A Graph never changes after construction; every
 * structural operation below returns a new one.
 */
class Graph
{
public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws std::invalid_argument on self-loops and std::out_of_range on
  /// endpoints outside [0, n). Repeated edges collapse.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int edge_count() const { return m_; }

  const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }
  VertexSet closed_neighborhood(Vertex v) const;
  int degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).contains(v); }

  /// Edges as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  VertexSet vertices() const { return VertexSet::full(n_); }

  bool operator==(const Graph& other) const = default;

private:
  friend Graph complement(const Graph& g);

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> rows_;
};

Graph complement(const Graph& g);

/// Vertex i is v_i of g, vertex n+i is its copy in the complement; the
/// matching joins i and n+i.
Graph complementary_prism(const Graph& g);

Graph disjoint_union(std::span<const Graph> parts);
inline Graph disjoint_union(std::initializer_list<Graph> parts)
{
  return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

/// Join: disjoint union plus every edge between different parts.
Graph join(std::span<const Graph> parts);

/// Subgraph induced on `keep`, relabelled to 0..|keep|-1 in ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Connected components ordered by their smallest vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// Single-source hop distances by breadth-first search.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// Unreachable for disconnected graphs, 0 for graphs with at most one vertex.
Distance diameter(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);
VertexSet simplicial_vertices(const Graph& g);

/// Exhaustive induced-P4 search over all 4-subsets.
bool is_cograph(const Graph& g);
bool is_tree(const Graph& g);
bool is_complete(const Graph& g);

}  // namespace prismhull

#endif
