#include "prismhull/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace prismhull {

Graph::Graph(int n) : n_(n)
{
  if (n < 0)
    throw std::invalid_argument("graph order must be non-negative, got " + std::to_string(n));
  rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::out_of_range("edge " + std::to_string(u) + "-" + std::to_string(v)
                              + " has an endpoint outside [0, " + std::to_string(n) + ")");
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (!rows_[u].contains(v))
      ++m_;
    rows_[u].insert(v);
    rows_[v].insert(u);
  }
}

VertexSet Graph::closed_neighborhood(Vertex v) const
{
  VertexSet s = neighbors(v);
  s.insert(v);
  return s;
}

std::vector<Edge> Graph::edges() const
{
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : rows_[u])
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

Graph complement(const Graph& g)
{
  Graph h(g.n_);
  for (Vertex v = 0; v < g.n_; ++v) {
    h.rows_[v] = g.rows_[v].complement();
    h.rows_[v].erase(v);
  }
  h.m_ = g.n_ * (g.n_ - 1) / 2 - g.m_;
  return h;
}

Graph complementary_prism(const Graph& g)
{
  const int n = g.order();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n * (n - 1) / 2 + n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v))
        edges.emplace_back(u, v);
      else
        edges.emplace_back(n + u, n + v);
    }
    edges.emplace_back(u, n + u);
  }
  return Graph(2 * n, edges);
}

Graph disjoint_union(std::span<const Graph> parts)
{
  int total = 0;
  for (const auto& p : parts)
    total += p.order();
  std::vector<Edge> edges;
  int offset = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.edges())
      edges.emplace_back(u + offset, v + offset);
    offset += p.order();
  }
  return Graph(total, edges);
}

Graph join(std::span<const Graph> parts)
{
  int total = 0;
  for (const auto& p : parts)
    total += p.order();
  std::vector<Edge> edges;
  int offset = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.edges())
      edges.emplace_back(u + offset, v + offset);
    for (Vertex u = offset; u < offset + p.order(); ++u)
      for (Vertex v = offset + p.order(); v < total; ++v)
        edges.emplace_back(u, v);
    offset += p.order();
  }
  return Graph(total, edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep)
{
  if (keep.universe() != g.order())
    throw std::invalid_argument("induced_subgraph: vertex set universe does not match graph order");
  std::vector<Vertex> label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex v : keep)
    label[v] = next++;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (label[u] >= 0 && label[v] >= 0)
      edges.emplace_back(label[u], label[v]);
  return Graph(next, edges);
}

std::vector<VertexSet> components(const Graph& g)
{
  const int n = g.order();
  std::vector<VertexSet> out;
  VertexSet seen(n);
  for (Vertex root = 0; root < n; ++root) {
    if (seen.contains(root))
      continue;
    VertexSet part(n);
    std::vector<Vertex> stack{root};
    seen.insert(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      part.insert(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(part));
  }
  return out;
}

bool is_connected(const Graph& g)
{
  return components(g).size() <= 1;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source)
{
  if (source < 0 || source >= g.order())
    throw std::out_of_range("bfs source " + std::to_string(source) + " out of range");
  std::vector<Distance> dist(static_cast<std::size_t>(g.order()), Distance::unreachable());
  std::deque<Vertex> queue{source};
  dist[source] = Distance(0);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    const auto next = Distance(dist[v].hops() + 1);
    for (Vertex w : g.neighbors(v)) {
      if (!dist[w].finite()) {
        dist[w] = next;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Distance diameter(const Graph& g)
{
  Distance best(0);
  for (Vertex v = 0; v < g.order(); ++v) {
    auto dist = bfs_distances(g, v);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    if (!best.finite())
      break;
  }
  return best;
}

bool is_clique(const Graph& g, const VertexSet& s)
{
  for (Vertex v : s) {
    VertexSet others = s;
    others.erase(v);
    if (!others.is_subset_of(g.neighbors(v)))
      return false;
  }
  return true;
}

VertexSet simplicial_vertices(const Graph& g)
{
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (is_clique(g, g.neighbors(v)))
      out.insert(v);
  return out;
}

namespace {

// A 4-vertex induced subgraph is a P4 iff it has 3 edges and degree
// sequence (1,1,2,2).
bool induces_p4(const Graph& g, const Vertex (&q)[4])
{
  int deg[4] = {0, 0, 0, 0};
  int edges = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g.adjacent(q[i], q[j])) {
        ++deg[i];
        ++deg[j];
        ++edges;
      }
  if (edges != 3)
    return false;
  std::sort(std::begin(deg), std::end(deg));
  return deg[0] == 1 && deg[1] == 1 && deg[2] == 2 && deg[3] == 2;
}

}  // namespace

bool is_cograph(const Graph& g)
{
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          const Vertex q[4] = {a, b, c, d};
          if (induces_p4(g, q))
            return false;
        }
  return true;
}

bool is_tree(const Graph& g)
{
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

bool is_complete(const Graph& g)
{
  const long n = g.order();
  return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace prismhull
