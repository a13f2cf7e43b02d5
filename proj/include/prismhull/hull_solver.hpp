#ifndef PRISMHULL_HULL_SOLVER_HPP
#define PRISMHULL_HULL_SOLVER_HPP

#include "prismhull/convexity.hpp"
#include "prismhull/graph.hpp"
#include "prismhull/vertex_set.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace prismhull {

using VertexPair = std::pair<Vertex, Vertex>;

struct SearchConfig
{
  /// Largest graph the exact search accepts. At most 64.
  int max_vertices = 24;
  int parallel_width = 1;
  /// When false, constraints and lower bounds are ignored and the search
  /// starts at cardinality 1 over all subsets.
  bool pruning_enabled = true;
  /// Re-solve without pruning (graphs with at most 8 vertices) and throw
  /// std::logic_error if the constrained answer differs.
  bool verify_unconstrained = false;

  void validate() const;
};

/// Candidates tested at one cardinality.
struct CardinalityLog
{
  int cardinality = 0;
  std::uint64_t tested = 0;
};

struct HullReport
{
  int hull_number = 0;
  VertexSet witness;
  VertexSet forced;
  std::vector<VertexPair> pairs;
  std::uint64_t sets_tested = 0;
  /// First cardinality the search examined.
  int start_cardinality = 0;
  std::vector<CardinalityLog> log;
};

/**
 * Precomputed closed intervals as 64-bit masks, for graphs of at most 64
 * vertices. hull() is a worklist closure: every pair of members is
 * expanded exactly once, so it reaches the same fixpoint as iterating I[.].
 */
class IntervalMasks
{
public:
  IntervalMasks(const Graph& g, const DistanceMatrix& dm);

  int order() const { return n_; }
  std::uint64_t full() const { return full_; }
  std::uint64_t interval(Vertex u, Vertex v) const {
    return table_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_)
                  + static_cast<std::size_t>(v)];
  }
  std::uint64_t hull(std::uint64_t s) const;
  bool spans(std::uint64_t s) const { return hull(s) == full_; }

private:
  int n_;
  std::uint64_t full_;
  std::vector<std::uint64_t> table_;
};

/// Simplicial vertices; every hull set contains them.
VertexSet forced_vertices(const Graph& g);

/// Pairs (i, n+i) of complementary_prism(base) with i simplicial in base
/// and i simplicial in its complement. Every hull set of the prism meets
/// each pair.
std::vector<VertexPair> forced_pairs_prism(const Graph& base);

/**
 * Minimum hull set by ascending-cardinality search.
 *
 * Within a cardinality only supersets of `forced` that meet every pair
 * are tested, in lexicographic order, so the witness is the
 * lexicographically smallest minimum hull set satisfying the
 * constraints. Constraints must be sound; pass an empty set and no pairs
 * for an unconstrained search.
 *
 * Throws CapError if the graph exceeds cfg.max_vertices,
 * std::invalid_argument if `forced` is over a different universe and
 * RangeError for pair endpoints outside the graph.
 */
HullReport hull_number_exact(const Graph& g, const SearchConfig& cfg, const VertexSet& forced,
                             std::span<const VertexPair> pairs);

/// Sums exact solutions over connected components, forcing simplicial
/// vertices of each. With pruning disabled, searches the whole graph.
HullReport hull_number(const Graph& g, const SearchConfig& cfg);

/// Hull number of complementary_prism(base) with simplicial vertices and
/// simplicial pairs as constraints. Cap applies to the prism (2n).
HullReport hull_number_prism(const Graph& base, const SearchConfig& cfg);

/// Every minimum hull set, by exhaustive enumeration. Throws CapError
/// above `cap` vertices.
std::vector<VertexSet> all_minimum_hull_sets(const Graph& g, int cap = 16);

}  // namespace prismhull

#endif
