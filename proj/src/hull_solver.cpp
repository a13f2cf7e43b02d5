#include "prismhull/hull_solver.hpp"

#include "prismhull/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

namespace prismhull {

void SearchConfig::validate() const
{
  if (max_vertices < 1 || max_vertices > 64)
    throw std::invalid_argument("max_vertices=" + std::to_string(max_vertices)
                                + " must lie in [1, 64]");
  if (parallel_width < 1)
    throw std::invalid_argument("parallel_width=" + std::to_string(parallel_width)
                                + " must be >= 1");
}

IntervalMasks::IntervalMasks(const Graph& g, const DistanceMatrix& dm)
  : n_(g.order()),
    full_(n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1)
{
  if (n_ > 64)
    throw CapError(n_, 64);
  table_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u; v < n_; ++v) {
      const auto mask = interval_pair(g, dm, u, v).to_mask();
      table_[static_cast<std::size_t>(u * n_ + v)] = mask;
      table_[static_cast<std::size_t>(v * n_ + u)] = mask;
    }
}

std::uint64_t IntervalMasks::hull(std::uint64_t s) const
{
  std::uint64_t result = s;
  std::uint64_t done = 0;
  std::uint64_t pending = s;
  while (pending != 0) {
    const Vertex x = std::countr_zero(pending);
    pending &= pending - 1;
    const std::uint64_t* row = &table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_)];
    std::uint64_t grown = 0;
    for (std::uint64_t rest = done; rest != 0; rest &= rest - 1)
      grown |= row[std::countr_zero(rest)];
    done |= std::uint64_t{1} << x;
    pending |= grown & ~result;
    result |= grown;
    if (result == full_)
      break;
  }
  return result;
}

VertexSet forced_vertices(const Graph& g)
{
  return simplicial_vertices(g);
}

std::vector<VertexPair> forced_pairs_prism(const Graph& base)
{
  const int n = base.order();
  const auto in_g = simplicial_vertices(base);
  const auto in_complement = simplicial_vertices(complement(base));
  std::vector<VertexPair> pairs;
  for (Vertex i = 0; i < n; ++i)
    if (in_g.contains(i) && in_complement.contains(i))
      pairs.emplace_back(i, n + i);
  return pairs;
}

namespace {

using Mask = std::uint64_t;

constexpr auto kNoRank = std::numeric_limits<std::uint64_t>::max();

class Binomials
{
public:
  Binomials()
  {
    for (int m = 0; m <= 64; ++m) {
      table_[m][0] = 1;
      for (int r = 1; r <= m; ++r)
        table_[m][r] = table_[m - 1][r - 1] + (r <= m - 1 ? table_[m - 1][r] : 0);
    }
  }
  std::uint64_t operator()(int m, int r) const
  {
    return (r < 0 || r > m) ? 0 : table_[m][r];
  }

private:
  std::array<std::array<std::uint64_t, 65>, 65> table_{};
};

const Binomials& binomial()
{
  static const Binomials b;
  return b;
}

// Lexicographic combination of r out of m with the given rank.
std::vector<int> unrank(std::uint64_t rank, int m, int r)
{
  std::vector<int> c(static_cast<std::size_t>(r));
  int v = 0;
  for (int i = 0; i < r; ++i) {
    for (;; ++v) {
      const auto count = binomial()(m - v - 1, r - i - 1);
      if (rank < count)
        break;
      rank -= count;
    }
    c[static_cast<std::size_t>(i)] = v++;
  }
  return c;
}

bool next_combination(std::vector<int>& c, int m)
{
  const int r = static_cast<int>(c.size());
  int i = r - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == m - r + i)
    --i;
  if (i < 0)
    return false;
  ++c[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < r; ++j)
    c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

struct RangeOutcome
{
  std::uint64_t found_rank = kNoRank;
  Mask found = 0;
  std::uint64_t tested = 0;
};

struct Level
{
  const IntervalMasks& masks;
  Mask forced;
  std::vector<Vertex> free;
  std::vector<Mask> pair_masks;  // pairs not already met by forced
  int r;
};

// Scans ranks [begin, end) and stops at the first hull set, or once a
// lower-ranked hit is published by another worker.
RangeOutcome scan(const Level& level, std::uint64_t begin, std::uint64_t end,
                  std::atomic<std::uint64_t>& best)
{
  RangeOutcome out;
  if (begin >= end)
    return out;
  const int m = static_cast<int>(level.free.size());
  auto c = unrank(begin, m, level.r);
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    if (rank > best.load(std::memory_order_relaxed))
      break;
    Mask s = level.forced;
    for (int idx : c)
      s |= Mask{1} << level.free[static_cast<std::size_t>(idx)];
    const bool admissible = std::all_of(level.pair_masks.begin(), level.pair_masks.end(),
                                        [s](Mask p) { return (s & p) != 0; });
    if (admissible) {
      ++out.tested;
      if (level.masks.spans(s)) {
        out.found_rank = rank;
        out.found = s;
        auto seen = best.load(std::memory_order_relaxed);
        while (rank < seen && !best.compare_exchange_weak(seen, rank)) {
        }
        return out;
      }
    }
    if (!next_combination(c, m))
      break;
  }
  return out;
}

// Searches one cardinality across `width` contiguous rank ranges. The
// lowest-ranked hit wins; the tested count covers only the ranges a
// sequential scan would have visited, so it does not depend on width.
std::optional<Mask> search_level(const Level& level, int width, std::uint64_t& tested)
{
  const std::uint64_t total = binomial()(static_cast<int>(level.free.size()), level.r);
  if (total == 0)
    return std::nullopt;
  const auto workers = static_cast<std::uint64_t>(std::min<std::uint64_t>(width, total));
  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<RangeOutcome> outcomes(static_cast<std::size_t>(workers));
  std::atomic<std::uint64_t> best{kNoRank};

  if (workers == 1) {
    outcomes[0] = scan(level, 0, total, best);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const auto begin = w * chunk;
      const auto end = std::min(total, begin + chunk);
      pool.emplace_back([&, w, begin, end] { outcomes[w] = scan(level, begin, end, best); });
    }
    for (auto& t : pool)
      t.join();
  }

  for (const auto& o : outcomes) {
    tested += o.tested;
    if (o.found_rank != kNoRank)
      return o.found;
  }
  return std::nullopt;
}

void check_cap(const Graph& g, const SearchConfig& cfg)
{
  cfg.validate();
  if (g.order() > cfg.max_vertices)
    throw CapError(g.order(), cfg.max_vertices);
}

// Sound lower bounds: each component needs min(|C|, 2) vertices (a single
// vertex is convex), and pairwise disjoint constraint pairs not met by
// `forced` need distinct extra vertices.
int lower_bound(const Graph& g, Mask forced, std::span<const Mask> unmet_pairs)
{
  int by_components = 0;
  for (const auto& c : components(g))
    by_components += std::min(c.size(), 2);
  int disjoint = 0;
  Mask used = 0;
  for (Mask p : unmet_pairs) {
    if ((p & used) == 0) {
      ++disjoint;
      used |= p;
    }
  }
  return std::max(by_components, std::popcount(forced) + disjoint);
}

}  // namespace

HullReport hull_number_exact(const Graph& g, const SearchConfig& cfg, const VertexSet& forced,
                             std::span<const VertexPair> pairs)
{
  check_cap(g, cfg);
  const int n = g.order();
  if (forced.universe() != n)
    throw std::invalid_argument("forced set over " + std::to_string(forced.universe())
                                + " vertices exceeds a graph of order " + std::to_string(n));
  for (auto [a, b] : pairs)
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw RangeError("constraint pair (" + std::to_string(a) + ", " + std::to_string(b)
                       + ") outside [0, " + std::to_string(n) + ")");

  const DistanceMatrix dm(g);
  const IntervalMasks masks(g, dm);

  HullReport report;
  report.forced = VertexSet(n);
  Mask forced_mask = 0;
  std::vector<Mask> unmet;
  if (cfg.pruning_enabled) {
    report.forced = forced;
    report.pairs.assign(pairs.begin(), pairs.end());
    forced_mask = forced.to_mask();
    for (auto [a, b] : pairs) {
      const Mask p = (Mask{1} << a) | (Mask{1} << b);
      if ((p & forced_mask) == 0)
        unmet.push_back(p);
    }
  }

  Level level{masks, forced_mask, {}, unmet, 0};
  for (Vertex v = 0; v < n; ++v)
    if (!((forced_mask >> v) & 1U))
      level.free.push_back(v);

  const int forced_count = std::popcount(forced_mask);
  int start = n == 0 ? 0 : 1;
  if (cfg.pruning_enabled)
    start = std::max(start, lower_bound(g, forced_mask, unmet));
  report.start_cardinality = start;

  for (int k = start; k <= n; ++k) {
    level.r = k - forced_count;
    std::uint64_t tested = 0;
    std::optional<Mask> hit;
    if (level.r >= 0)
      hit = search_level(level, cfg.parallel_width, tested);
    report.log.push_back({k, tested});
    report.sets_tested += tested;
    if (hit) {
      report.hull_number = k;
      report.witness = VertexSet::from_mask(n, *hit);
      break;
    }
  }
  if (report.witness.universe() != n)
    throw std::logic_error("no hull set satisfies the supplied constraints");

  if (cfg.verify_unconstrained && cfg.pruning_enabled && n <= 8) {
    SearchConfig plain = cfg;
    plain.pruning_enabled = false;
    plain.verify_unconstrained = false;
    const auto check = hull_number_exact(g, plain, VertexSet(n), {});
    if (check.hull_number != report.hull_number)
      throw std::logic_error("constrained search found " + std::to_string(report.hull_number)
                             + " but unconstrained search found "
                             + std::to_string(check.hull_number));
  }
  return report;
}

HullReport hull_number(const Graph& g, const SearchConfig& cfg)
{
  check_cap(g, cfg);
  const int n = g.order();
  if (!cfg.pruning_enabled)
    return hull_number_exact(g, cfg, VertexSet(n), {});

  const auto parts = components(g);
  if (parts.size() <= 1)
    return hull_number_exact(g, cfg, forced_vertices(g), {});

  HullReport total;
  total.witness = VertexSet(n);
  total.forced = VertexSet(n);
  for (const auto& part : parts) {
    const auto sub = induced_subgraph(g, part);
    const auto report = hull_number_exact(sub, cfg, forced_vertices(sub), {});
    const auto label = part.members();
    total.hull_number += report.hull_number;
    total.start_cardinality += report.start_cardinality;
    total.sets_tested += report.sets_tested;
    for (Vertex v : report.witness)
      total.witness.insert(label[static_cast<std::size_t>(v)]);
    for (Vertex v : report.forced)
      total.forced.insert(label[static_cast<std::size_t>(v)]);
    total.log.insert(total.log.end(), report.log.begin(), report.log.end());
  }
  return total;
}

HullReport hull_number_prism(const Graph& base, const SearchConfig& cfg)
{
  cfg.validate();
  if (2 * base.order() > cfg.max_vertices)
    throw CapError(2 * base.order(), cfg.max_vertices);
  const auto prism = complementary_prism(base);
  const auto pairs = forced_pairs_prism(base);
  return hull_number_exact(prism, cfg, forced_vertices(prism), pairs);
}

std::vector<VertexSet> all_minimum_hull_sets(const Graph& g, int cap)
{
  const int n = g.order();
  if (n > cap || n > 30)
    throw CapError(n, std::min(cap, 30));
  const DistanceMatrix dm(g);
  const IntervalMasks masks(g, dm);

  std::vector<VertexSet> found;
  int best = n + 1;
  const Mask limit = Mask{1} << n;
  std::vector<Mask> hits;
  for (Mask s = 0; s < limit; ++s) {
    const int size = std::popcount(s);
    if (size > best || !masks.spans(s))
      continue;
    if (size < best) {
      best = size;
      hits.clear();
    }
    hits.push_back(s);
  }
  for (Mask s : hits)
    found.push_back(VertexSet::from_mask(n, s));
  std::sort(found.begin(), found.end(), VertexSet::lex_less);
  return found;
}

}  // namespace prismhull
