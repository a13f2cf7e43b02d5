#include "doctest.h"

#include "prismhull/convexity.hpp"
#include "prismhull/family.hpp"

#include <random>

using namespace prismhull;

namespace {

Graph gen(const char* text) { return generate(parse_family(text)); }

std::vector<Graph> corpus()
{
  std::vector<Graph> out;
  for (int n = 1; n <= 7; ++n)
    for (std::uint64_t seed = 0; seed < 3; ++seed)
      out.push_back(generate(FamilySpec::gnp(n, 100 + 7 * seed + n, 45)));
  for (const char* text : {"path:6", "cycle:6", "cycle:5", "star:4", "prism(path:4)",
                           "prism(cycle:4)", "union(path:3,complete:2)", "theorem9:4"})
    out.push_back(gen(text));
  return out;
}

// Smallest convex superset by enumerating every subset.
VertexSet smallest_convex_superset(const Graph& g, const DistanceMatrix& dm, const VertexSet& s)
{
  const int n = g.order();
  VertexSet best = VertexSet::full(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto t = VertexSet::from_mask(n, mask);
    if (s.is_subset_of(t) && is_convex(g, dm, t))
      best &= t;
  }
  return best;
}

}  // namespace

TEST_CASE("all pairs distances")
{
  const auto p4 = gen("path:4");
  CHECK(all_pairs_distances(p4)(0, 3) == Distance(3));
  const auto prism = gen("prism(path:4)");
  CHECK(all_pairs_distances(prism)(0, 7) == Distance(2));
  CHECK_FALSE(all_pairs_distances(gen("union(path:1,path:1)"))(0, 1).finite());
}

TEST_CASE("distance matrix invariants")
{
  for (const auto& g : corpus()) {
    const DistanceMatrix dm(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      CHECK(dm(u, u) == Distance(0));
      for (Vertex v = 0; v < g.order(); ++v) {
        CHECK(dm(u, v) == dm(v, u));
        CHECK((dm(u, v) == Distance(1)) == g.adjacent(u, v));
        for (Vertex w = 0; w < g.order(); ++w)
          if (dm(u, v).finite() && dm(v, w).finite())
            CHECK(dm(u, w) <= Distance(dm(u, v).hops() + dm(v, w).hops()));
      }
    }
  }
}

TEST_CASE("closed intervals of pairs")
{
  const auto p4 = gen("path:4");
  CHECK(interval_pair(p4, DistanceMatrix(p4), 0, 3) == VertexSet::full(4));
  const auto c4 = gen("cycle:4");
  CHECK(interval_pair(c4, DistanceMatrix(c4), 0, 2) == VertexSet::full(4));
  const auto c6 = gen("cycle:6");
  CHECK(interval_pair(c6, DistanceMatrix(c6), 0, 2) == VertexSet(6, {0, 1, 2}));
  const auto split = gen("union(path:2,path:2)");
  CHECK(interval_pair(split, DistanceMatrix(split), 0, 3) == VertexSet(4, {0, 3}));
  CHECK(interval_pair(c6, DistanceMatrix(c6), 4, 4) == VertexSet(6, {4}));
}

TEST_CASE("interval pair symmetry and edges")
{
  for (const auto& g : corpus()) {
    const DistanceMatrix dm(g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v) {
        CHECK(interval_pair(g, dm, u, v) == interval_pair(g, dm, v, u));
        if (g.adjacent(u, v))
          CHECK(interval_pair(g, dm, u, v) == VertexSet(g.order(), {u, v}));
      }
  }
}

TEST_CASE("closed interval of a set")
{
  const auto p5 = gen("path:5");
  const DistanceMatrix dm(p5);
  CHECK(interval_set(p5, dm, VertexSet(5, {0, 4})) == VertexSet::full(5));
  CHECK(interval_set(p5, dm, VertexSet(5)).empty());

  const auto star_prism = gen("prism(star:3)");
  CHECK(interval_set(star_prism, DistanceMatrix(star_prism), VertexSet(8, {4, 5, 6, 7}))
        == VertexSet::full(8));
}

TEST_CASE("convex hull traces")
{
  const auto p4 = gen("path:4");
  const auto trace = convex_hull(p4, DistanceMatrix(p4), VertexSet(4, {0, 3}));
  CHECK(trace.final_set() == VertexSet::full(4));
  CHECK(trace.growth_steps() == 1);
  CHECK(trace.steps.size() == 3);

  const auto c5 = gen("cycle:5");
  CHECK(convex_hull(c5, DistanceMatrix(c5), VertexSet(5, {0, 1})).final_set() == VertexSet(5, {0, 1}));

  const auto prism = gen("prism(cycle:5)");
  const DistanceMatrix pdm(prism);
  for (Vertex v = 0; v < 10; ++v)
    CHECK(convex_hull(prism, pdm, VertexSet(10, {v})).final_set() == VertexSet(10, {v}));

  const auto empty = convex_hull(Graph(0), DistanceMatrix(Graph(0)), VertexSet(0));
  CHECK(empty.final_set().empty());
}

TEST_CASE("convexity and hull set predicates")
{
  const auto p5 = gen("path:5");
  const DistanceMatrix dm(p5);
  CHECK(is_convex(p5, dm, VertexSet(5, {1, 2, 3})));
  CHECK_FALSE(is_convex(p5, dm, VertexSet(5, {0, 4})));
  for (const auto& g : corpus())
    CHECK(is_convex(g, DistanceMatrix(g), g.vertices()));

  const auto p4 = gen("path:4");
  CHECK(is_hull_set(p4, DistanceMatrix(p4), VertexSet(4, {0, 3})));
  const auto k3 = gen("complete:3");
  CHECK_FALSE(is_hull_set(k3, DistanceMatrix(k3), VertexSet(3, {0, 1})));
  const auto prism = gen("prism(path:4)");
  CHECK(is_hull_set(prism, DistanceMatrix(prism), VertexSet(8, {0, 3})));
}

TEST_CASE("hull operator properties on random sets")
{
  std::mt19937_64 rng(5);
  for (const auto& g : corpus()) {
    const int n = g.order();
    const DistanceMatrix dm(g);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (int trial = 0; trial < 6; ++trial) {
      const auto s = VertexSet::from_mask(n, rng() & full);
      const auto t = s | VertexSet::from_mask(n, rng() & full);
      const auto is = interval_set(g, dm, s);
      CHECK(s.is_subset_of(is));
      CHECK(is.is_subset_of(interval_set(g, dm, t)));

      const auto trace = convex_hull(g, dm, s);
      CHECK(interval_set(g, dm, trace.final_set()) == trace.final_set());
      CHECK(trace.growth_steps() <= n - s.size());
      for (int p = 0; p < trace.growth_steps(); ++p)
        CHECK((trace.steps[p].is_subset_of(trace.steps[p + 1]) && trace.steps[p] != trace.steps[p + 1]));
      CHECK(trace.steps.back() == trace.final_set());
      if (n <= 7)
        CHECK(trace.final_set() == smallest_convex_superset(g, dm, s));
    }
  }
}

TEST_CASE("convex sets are closed under intersection")
{
  for (const auto& g : corpus()) {
    if (g.order() > 7)
      continue;
    const DistanceMatrix dm(g);
    std::vector<VertexSet> convex;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
      const auto s = VertexSet::from_mask(g.order(), mask);
      if (is_convex(g, dm, s))
        convex.push_back(s);
    }
    for (std::size_t i = 0; i < convex.size(); i += 3)
      for (std::size_t j = 0; j < convex.size(); j += 5)
        CHECK(is_convex(g, dm, convex[i] & convex[j]));
  }
}
