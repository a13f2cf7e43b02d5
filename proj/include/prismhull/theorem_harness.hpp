#ifndef PRISMHULL_THEOREM_HARNESS_HPP
#define PRISMHULL_THEOREM_HARNESS_HPP

#include "prismhull/family.hpp"
#include "prismhull/hull_solver.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prismhull {

enum class Verdict { pass, fail, not_applicable, invalid };

const char* to_string(Verdict v);

/// Predicate over an observed integer: equality, one-sided bound, or a
/// closed range.
struct Expectation
{
  enum class Kind { equal, at_most, at_least, between };

  Kind kind = Kind::equal;
  long lo = 0;
  long hi = 0;

  static Expectation equal(long v) { return {Kind::equal, v, v}; }
  static Expectation at_most(long v) { return {Kind::at_most, v, v}; }
  static Expectation at_least(long v) { return {Kind::at_least, v, v}; }
  static Expectation between(long lo, long hi) { return {Kind::between, lo, hi}; }

  bool holds(long observed) const;
  /// Distance to the violated side for bounds; nullopt for equalities.
  std::optional<long> slack(long observed) const;
  /// "eq:5", "le:4", "ge:3", "in:3..5".
  std::string to_string() const;
};

struct TheoremCheck
{
  std::string theorem_id;
  std::string instance;
  Expectation expected;
  std::optional<HullReport> observed;
  /// Hull number for theorem checks, violation count for lemma checks.
  std::optional<long> observed_value;
  Verdict verdict = Verdict::not_applicable;
  std::optional<long> slack;
  std::string note;

  /// One whitespace-separated record:
  /// id instance expected=.. observed=.. verdict=.. slack=.. [note=..]
  std::string to_line() const;
};

/// Every theorem id the harness knows, in report order.
const std::vector<std::string>& theorem_ids();

struct IntRange
{
  int lo;
  int hi;
};

// Individual checks. Each builds its instances, solves exactly, and
// grades the observed hull number; classification is always recomputed
// from the generated graph.

/// Complete, path and cycle prisms over `n` (each family clipped to its
/// domain). Without a range: complete 2..8, path 3..9, cycle 3..9.
std::vector<TheoremCheck> check_duarte(std::optional<IntRange> n, const SearchConfig& cfg);
std::vector<TheoremCheck> check_trees(std::span<const FamilySpec> specs, const SearchConfig& cfg);
std::vector<TheoremCheck> check_disconnected(std::span<const FamilySpec> specs,
                                             const SearchConfig& cfg);
std::vector<TheoremCheck> check_cographs(std::span<const FamilySpec> specs, const SearchConfig& cfg);
/// n = 2 uses P4; larger n the theorem9 gadget.
std::vector<TheoremCheck> check_unbounded(IntRange n, const SearchConfig& cfg);
std::vector<TheoremCheck> check_lemmas(std::span<const FamilySpec> corpus, const SearchConfig& cfg);

// Default instance lists, all deterministic.
std::vector<FamilySpec> default_tree_specs();
std::vector<FamilySpec> default_disconnected_specs();
std::vector<FamilySpec> default_cograph_specs();
/// 200 graphs with at most 8 vertices: every family plus seeded random graphs.
std::vector<FamilySpec> lemma_corpus();

struct SuiteOptions
{
  /// Exact id ("T9") or group prefix ("T2", "T8"); empty runs everything.
  std::string theorem;
  /// Parameter range for the n-indexed families (T2.x, T9).
  std::optional<IntRange> range;
  SearchConfig search;
  /// Instances solved concurrently.
  int workers = 1;
};

bool theorem_matches(const std::string& id, const std::string& filter);

/// Runs the selected checks; output order does not depend on `workers`.
std::vector<TheoremCheck> run_suite(const SuiteOptions& options);

std::string format_report(std::span<const TheoremCheck> checks);

}  // namespace prismhull

#endif
