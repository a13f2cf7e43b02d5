#include "doctest.h"

#include "prismhull/family.hpp"
#include "prismhull/graph.hpp"

#include <random>

using namespace prismhull;

namespace {

Graph P(int n) { return generate(FamilySpec::path(n)); }
Graph C(int n) { return generate(FamilySpec::cycle(n)); }
Graph K(int n) { return generate(FamilySpec::complete(n)); }

std::vector<Graph> small_corpus()
{
  std::vector<Graph> out;
  for (int n = 0; n <= 7; ++n)
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
      out.push_back(generate(FamilySpec::gnp(n, seed * 31 + n)));
  for (int n = 1; n <= 6; ++n) {
    out.push_back(P(n));
    out.push_back(K(n));
    out.push_back(generate(FamilySpec::tree(n, n)));
  }
  return out;
}

}  // namespace

TEST_CASE("graph construction rejects loops and bad endpoints")
{
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::out_of_range);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("complement")
{
  const auto k4 = complement(K(4));
  CHECK(k4.order() == 4);
  CHECK(k4.edge_count() == 0);
  CHECK(complement(complement(P(5))) == P(5));
  // C5 is self-complementary: 10 - 5 edges.
  CHECK(complement(C(5)).edge_count() == 5);
  for (Vertex v = 0; v < 5; ++v)
    CHECK(complement(C(5)).degree(v) == 2);
}

TEST_CASE("complementary prism")
{
  const auto p4 = complementary_prism(P(4));
  CHECK(p4.order() == 8);
  CHECK(p4.edge_count() == 10);

  const auto k3 = complementary_prism(K(3));
  CHECK(k3.order() == 6);
  CHECK(k3.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}});

  const auto s3 = complementary_prism(generate(FamilySpec::star(3)));
  CHECK(s3.order() == 8);
  CHECK(s3.edge_count() == 10);
  CHECK(s3.degree(4) == 1);
}

TEST_CASE("complementary prism structure on random graphs")
{
  for (const auto& g : small_corpus()) {
    const int n = g.order();
    const auto prism = complementary_prism(g);
    CHECK(prism.order() == 2 * n);
    CHECK(prism.edge_count() == n * (n - 1) / 2 + n);

    VertexSet low(2 * n), high(2 * n);
    for (Vertex i = 0; i < n; ++i) {
      low.insert(i);
      high.insert(n + i);
    }
    CHECK(induced_subgraph(prism, low) == g);
    CHECK(induced_subgraph(prism, high) == complement(g));
    for (Vertex i = 0; i < n; ++i) {
      CHECK((prism.neighbors(i) & high) == VertexSet(2 * n, {n + i}));
      CHECK((prism.neighbors(n + i) & low) == VertexSet(2 * n, {i}));
    }

    // Block swap i <-> n+i maps prism(g) onto prism(complement(g)).
    const auto other = complementary_prism(complement(g));
    auto swap = [n](Vertex v) { return v < n ? v + n : v - n; };
    for (auto [u, v] : prism.edges())
      CHECK(other.adjacent(swap(u), swap(v)));
    CHECK(other.edge_count() == prism.edge_count());
  }
}

TEST_CASE("disjoint union and components")
{
  const auto kk = disjoint_union({K(2), K(2)});
  CHECK(kk.order() == 4);
  CHECK(kk.edge_count() == 2);
  CHECK(components(kk).size() == 2);

  CHECK(disjoint_union({P(3)}) == P(3));

  const auto mix = disjoint_union({K(3), K(1), K(1)});
  CHECK(mix.order() == 5);
  CHECK(mix.edge_count() == 3);
  CHECK(components(mix).size() == 3);

  CHECK(components(P(5)) == std::vector<VertexSet>{VertexSet::full(5)});
  CHECK(components(disjoint_union({K(2), K(1)}))
        == std::vector<VertexSet>{VertexSet(3, {0, 1}), VertexSet(3, {2})});
  CHECK(components(Graph(3))
        == std::vector<VertexSet>{VertexSet(3, {0}), VertexSet(3, {1}), VertexSet(3, {2})});
  CHECK(components(Graph(0)).empty());
}

TEST_CASE("components form a partition with no crossing edges")
{
  for (const auto& g : small_corpus()) {
    const auto parts = components(g);
    VertexSet seen(g.order());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      CHECK_FALSE(parts[i].empty());
      CHECK_FALSE(parts[i].intersects(seen));
      seen |= parts[i];
      if (i > 0)
        CHECK(*parts[i - 1].begin() < *parts[i].begin());
    }
    CHECK(seen == g.vertices());
    for (auto [u, v] : g.edges())
      for (const auto& p : parts)
        CHECK(p.contains(u) == p.contains(v));
  }
}

TEST_CASE("diameter")
{
  CHECK(diameter(P(5)) == Distance(4));
  CHECK(diameter(K(4)) == Distance(1));
  CHECK(diameter(complementary_prism(K(3))) == Distance(3));
  CHECK(diameter(Graph(0)) == Distance(0));
  CHECK(diameter(Graph(1)) == Distance(0));
  CHECK(diameter(Graph(2)) == Distance::unreachable());
  CHECK(Distance(1000) < Distance::unreachable());
}

TEST_CASE("simplicial vertices")
{
  CHECK(simplicial_vertices(P(4)) == VertexSet(4, {0, 3}));
  CHECK(simplicial_vertices(K(5)) == VertexSet::full(5));
  CHECK(simplicial_vertices(C(5)).empty());
  CHECK(simplicial_vertices(Graph(2)) == VertexSet::full(2));

  // Direct pairwise definition.
  for (const auto& g : small_corpus()) {
    const auto simp = simplicial_vertices(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      bool all_adjacent = true;
      for (Vertex a : g.neighbors(v))
        for (Vertex b : g.neighbors(v))
          if (a != b && !g.adjacent(a, b))
            all_adjacent = false;
      CHECK(simp.contains(v) == all_adjacent);
    }
  }
}

TEST_CASE("cograph recognition")
{
  CHECK_FALSE(is_cograph(P(4)));
  CHECK(is_cograph(K(4)));
  CHECK(is_cograph(generate(FamilySpec::star(5))));
  CHECK_FALSE(is_cograph(C(5)));
  for (const auto& g : small_corpus())
    CHECK(is_cograph(g) == is_cograph(complement(g)));
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    CHECK(is_cograph(generate(FamilySpec::cograph(1 + static_cast<int>(seed % 9), seed))));
}

TEST_CASE("tree recognition")
{
  CHECK(is_tree(P(6)));
  CHECK_FALSE(is_tree(C(4)));
  CHECK_FALSE(is_tree(disjoint_union({K(1), K(1)})));
  CHECK_FALSE(is_tree(Graph(0)));
  CHECK(is_tree(Graph(1)));
}
