#ifndef PRISMHULL_FAMILY_HPP
#define PRISMHULL_FAMILY_HPP

#include "prismhull/graph.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace prismhull {

enum class FamilyKind {
  path,
  cycle,
  complete,
  star,
  tree,
  disconnected,
  cograph,
  theorem9,
  gnp,
  edges,
  join,
  complement,
  prism,
};

/**
 * Symbolic description of a generated graph.
 *
 * Leaf kinds carry `n` and kind-specific options; `disconnected`, `join`,
 * `complement` and `prism` are combinators over `parts`. The textual form
 * is the family DSL accepted by the command line:
 *
 *   path:5  cycle:6  complete:4  star:3  theorem9:6
 *   tree:8:seed=7  cograph:6:seed=3  cograph:9:seed=1:depth=2
 *   gnp:7:seed=4  gnp:7:seed=4:p=30  edges:4:0-1;1-2;2-3
 *   union(complete:3,path:1)  join(...)  complement(...)  prism(...)
 */
struct FamilySpec
{
  FamilyKind kind = FamilyKind::path;
  int n = 1;
  std::uint64_t seed = 0;
  /// Maximum cotree depth for `cograph`; 0 means unbounded.
  int depth = 0;
  /// Edge probability in percent for `gnp`.
  int percent = 50;
  std::vector<FamilySpec> parts;
  std::vector<Edge> edge_list;

  static FamilySpec path(int n) { return leaf(FamilyKind::path, n); }
  static FamilySpec cycle(int n) { return leaf(FamilyKind::cycle, n); }
  static FamilySpec complete(int n) { return leaf(FamilyKind::complete, n); }
  static FamilySpec star(int leaves) { return leaf(FamilyKind::star, leaves); }
  static FamilySpec theorem9(int n) { return leaf(FamilyKind::theorem9, n); }
  static FamilySpec tree(int n, std::uint64_t seed);
  static FamilySpec cograph(int n, std::uint64_t seed, int depth = 0);
  static FamilySpec gnp(int n, std::uint64_t seed, int percent = 50);
  static FamilySpec explicit_graph(const Graph& g);
  static FamilySpec disjoint(std::vector<FamilySpec> parts);
  static FamilySpec joined(std::vector<FamilySpec> parts);
  static FamilySpec complement_of(FamilySpec inner);
  static FamilySpec prism_of(FamilySpec inner);

  /// Throws std::invalid_argument naming the offending parameter.
  void validate() const;

  /// Canonical DSL form; parse_family(to_string()) gives back an equal spec object.
  std::string to_string() const;

  bool operator==(const FamilySpec&) const = default;

private:
  static FamilySpec leaf(FamilyKind kind, int n);
};

/// Throws ParseError naming the offending token; domain violations surface
/// as std::invalid_argument from validate().
FamilySpec parse_family(std::string_view text);

/// Deterministic: equal specs (seed included) give identical graphs.
Graph generate(const FamilySpec& spec);

}  // namespace prismhull

#endif
