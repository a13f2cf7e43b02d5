#include "prismhull/family.hpp"

#include "prismhull/errors.hpp"

#include <charconv>
#include <random>
#include <sstream>
#include <stdexcept>

namespace prismhull {

FamilySpec FamilySpec::leaf(FamilyKind kind, int n)
{
  FamilySpec s;
  s.kind = kind;
  s.n = n;
  return s;
}

FamilySpec FamilySpec::tree(int n, std::uint64_t seed)
{
  auto s = leaf(FamilyKind::tree, n);
  s.seed = seed;
  return s;
}

FamilySpec FamilySpec::cograph(int n, std::uint64_t seed, int depth)
{
  auto s = leaf(FamilyKind::cograph, n);
  s.seed = seed;
  s.depth = depth;
  return s;
}

FamilySpec FamilySpec::gnp(int n, std::uint64_t seed, int percent)
{
  auto s = leaf(FamilyKind::gnp, n);
  s.seed = seed;
  s.percent = percent;
  return s;
}

FamilySpec FamilySpec::explicit_graph(const Graph& g)
{
  auto s = leaf(FamilyKind::edges, g.order());
  s.edge_list = g.edges();
  return s;
}

FamilySpec FamilySpec::disjoint(std::vector<FamilySpec> parts)
{
  FamilySpec s;
  s.kind = FamilyKind::disconnected;
  s.n = 0;
  s.parts = std::move(parts);
  return s;
}

FamilySpec FamilySpec::joined(std::vector<FamilySpec> parts)
{
  auto s = disjoint(std::move(parts));
  s.kind = FamilyKind::join;
  return s;
}

FamilySpec FamilySpec::complement_of(FamilySpec inner)
{
  auto s = disjoint({std::move(inner)});
  s.kind = FamilyKind::complement;
  return s;
}

FamilySpec FamilySpec::prism_of(FamilySpec inner)
{
  auto s = disjoint({std::move(inner)});
  s.kind = FamilyKind::prism;
  return s;
}

namespace {

const char* kind_name(FamilyKind kind)
{
  switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete: return "complete";
    case FamilyKind::star: return "star";
    case FamilyKind::tree: return "tree";
    case FamilyKind::disconnected: return "union";
    case FamilyKind::cograph: return "cograph";
    case FamilyKind::theorem9: return "theorem9";
    case FamilyKind::gnp: return "gnp";
    case FamilyKind::edges: return "edges";
    case FamilyKind::join: return "join";
    case FamilyKind::complement: return "complement";
    case FamilyKind::prism: return "prism";
  }
  return "?";
}

bool is_combinator(FamilyKind kind)
{
  return kind == FamilyKind::disconnected || kind == FamilyKind::join
         || kind == FamilyKind::complement || kind == FamilyKind::prism;
}

void require(bool ok, const std::string& what)
{
  if (!ok)
    throw std::invalid_argument(what);
}

}  // namespace

void FamilySpec::validate() const
{
  const std::string name = kind_name(kind);
  const std::string n_is = name + " parameter n=" + std::to_string(n);
  switch (kind) {
    case FamilyKind::path: require(n >= 1, n_is + " must be >= 1"); break;
    case FamilyKind::cycle: require(n >= 3, n_is + " must be >= 3"); break;
    case FamilyKind::complete: require(n >= 0, n_is + " must be >= 0"); break;
    case FamilyKind::star: require(n >= 1, n_is + " (leaves) must be >= 1"); break;
    case FamilyKind::tree: require(n >= 1, n_is + " must be >= 1"); break;
    case FamilyKind::cograph:
      require(n >= 1, n_is + " must be >= 1");
      require(depth >= 0, name + " parameter depth=" + std::to_string(depth) + " must be >= 0");
      break;
    case FamilyKind::theorem9: require(n >= 2, n_is + " must be >= 2"); break;
    case FamilyKind::gnp:
      require(n >= 0, n_is + " must be >= 0");
      require(percent >= 0 && percent <= 100,
              name + " parameter p=" + std::to_string(percent) + " must lie in [0, 100]");
      break;
    case FamilyKind::edges:
      require(n >= 0, n_is + " must be >= 0");
      for (auto [u, v] : edge_list)
        require(u >= 0 && v < n && u < v,
                name + " edge " + std::to_string(u) + "-" + std::to_string(v)
                    + " must satisfy 0 <= u < v < n");
      break;
    case FamilyKind::disconnected:
    case FamilyKind::join:
      require(!parts.empty(), name + " needs at least one part");
      break;
    case FamilyKind::complement:
    case FamilyKind::prism:
      require(parts.size() == 1, name + " takes exactly one argument");
      break;
  }
  for (const auto& p : parts)
    p.validate();
}

std::string FamilySpec::to_string() const
{
  std::ostringstream os;
  os << kind_name(kind);
  if (is_combinator(kind)) {
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i)
      os << (i ? "," : "") << parts[i].to_string();
    os << ')';
    return os.str();
  }
  os << ':' << n;
  switch (kind) {
    case FamilyKind::tree: os << ":seed=" << seed; break;
    case FamilyKind::cograph:
      os << ":seed=" << seed;
      if (depth != 0)
        os << ":depth=" << depth;
      break;
    case FamilyKind::gnp:
      os << ":seed=" << seed;
      if (percent != 50)
        os << ":p=" << percent;
      break;
    case FamilyKind::edges:
      if (!edge_list.empty()) {
        os << ':';
        for (std::size_t i = 0; i < edge_list.size(); ++i)
          os << (i ? ";" : "") << edge_list[i].first << '-' << edge_list[i].second;
      }
      break;
    default: break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// DSL parser

namespace {

class DslParser
{
public:
  explicit DslParser(std::string_view text) : text_(text) {}

  FamilySpec parse_all()
  {
    auto spec = parse_spec();
    if (pos_ != text_.size())
      fail("trailing input '" + std::string(text_.substr(pos_)) + "'");
    return spec;
  }

private:
  [[noreturn]] void fail(const std::string& what) const
  {
    throw ParseError("family expression: " + what);
  }

  static bool is_name_char(char c)
  {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  }

  std::string_view take_while(bool (*pred)(char))
  {
    auto start = pos_;
    while (pos_ < text_.size() && pred(text_[pos_]))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::string_view take_field()
  {
    return take_while([](char c) { return c != ':' && c != ',' && c != '(' && c != ')'; });
  }

  bool accept(char c)
  {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  template <typename Int>
  Int to_int(std::string_view token) const
  {
    Int value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      fail("malformed integer '" + std::string(token) + "'");
    return value;
  }

  FamilySpec parse_spec()
  {
    auto name = take_while(is_name_char);
    if (name.empty())
      fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                               : "unexpected end of input");
    if (accept('('))
      return parse_combinator(name);
    return parse_leaf(name);
  }

  FamilySpec parse_combinator(std::string_view name)
  {
    std::vector<FamilySpec> parts;
    do {
      parts.push_back(parse_spec());
    } while (accept(','));
    if (!accept(')'))
      fail("expected ')' after arguments of '" + std::string(name) + "'");

    if (name == "union" || name == "disconnected")
      return FamilySpec::disjoint(std::move(parts));
    if (name == "join")
      return FamilySpec::joined(std::move(parts));
    if (parts.size() != 1)
      fail("'" + std::string(name) + "' takes exactly one argument");
    if (name == "complement")
      return FamilySpec::complement_of(std::move(parts.front()));
    if (name == "prism")
      return FamilySpec::prism_of(std::move(parts.front()));
    fail("unknown combinator '" + std::string(name) + "'");
  }

  FamilySpec parse_leaf(std::string_view name)
  {
    FamilySpec spec;
    if (name == "path") spec.kind = FamilyKind::path;
    else if (name == "cycle") spec.kind = FamilyKind::cycle;
    else if (name == "complete") spec.kind = FamilyKind::complete;
    else if (name == "star") spec.kind = FamilyKind::star;
    else if (name == "tree") spec.kind = FamilyKind::tree;
    else if (name == "cograph") spec.kind = FamilyKind::cograph;
    else if (name == "theorem9") spec.kind = FamilyKind::theorem9;
    else if (name == "gnp") spec.kind = FamilyKind::gnp;
    else if (name == "edges") spec.kind = FamilyKind::edges;
    else fail("unknown family '" + std::string(name) + "'");

    if (!accept(':'))
      fail("'" + std::string(name) + "' needs a size, e.g. '" + std::string(name) + ":5'");
    spec.n = to_int<int>(take_field());

    while (accept(':')) {
      auto field = take_field();
      if (spec.kind == FamilyKind::edges) {
        parse_edges(field, spec);
        continue;
      }
      auto eq = field.find('=');
      if (eq == std::string_view::npos)
        fail("expected key=value, got '" + std::string(field) + "'");
      auto key = field.substr(0, eq);
      auto value = field.substr(eq + 1);
      bool seeded = spec.kind == FamilyKind::tree || spec.kind == FamilyKind::cograph
                    || spec.kind == FamilyKind::gnp;
      if (key == "seed" && seeded)
        spec.seed = to_int<std::uint64_t>(value);
      else if (key == "depth" && spec.kind == FamilyKind::cograph)
        spec.depth = to_int<int>(value);
      else if (key == "p" && spec.kind == FamilyKind::gnp)
        spec.percent = to_int<int>(value);
      else
        fail("unknown option '" + std::string(field) + "' for '" + std::string(name) + "'");
    }
    return spec;
  }

  void parse_edges(std::string_view field, FamilySpec& spec) const
  {
    if (!spec.edge_list.empty())
      fail("edge list given twice");
    std::size_t start = 0;
    while (start <= field.size()) {
      auto stop = field.find(';', start);
      if (stop == std::string_view::npos)
        stop = field.size();
      auto token = field.substr(start, stop - start);
      auto dash = token.find('-');
      if (dash == std::string_view::npos)
        fail("malformed edge '" + std::string(token) + "'");
      spec.edge_list.emplace_back(to_int<int>(token.substr(0, dash)),
                                  to_int<int>(token.substr(dash + 1)));
      start = stop + 1;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Portable bounded draw; std::uniform_int_distribution differs across
// standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound)
{
  return rng() % bound;
}

Graph make_path(int n)
{
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i)
    edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph make_cycle(int n)
{
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph(n, edges);
}

Graph make_complete(int n)
{
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph make_star(int leaves)
{
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i)
    edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

// Decodes a uniformly drawn Pruefer sequence.
Graph make_tree(int n, std::uint64_t seed)
{
  if (n <= 2)
    return make_path(n);
  std::mt19937_64 rng(seed);
  std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code)
    c = static_cast<Vertex>(draw(rng, static_cast<std::uint64_t>(n)));

  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (Vertex c : code)
    ++degree[c];
  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1)
      ++leaf;
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    --degree[leaf];
    --degree[c];
  }
  Vertex a = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.emplace_back(a, v);
        break;
      }
    }
  }
  return Graph(n, edges);
}

// Random cotree with exactly `n` leaves: internal nodes are union or join
// with equal probability and split their leaf budget uniformly in two.
Graph make_cotree(std::mt19937_64& rng, int n, int level, int max_depth)
{
  if (n == 1)
    return Graph(1);
  const bool use_join = draw(rng, 2) == 1;
  std::vector<Graph> children;
  if (max_depth > 0 && level >= max_depth) {
    children.assign(static_cast<std::size_t>(n), Graph(1));
  } else {
    const int left = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(n - 1)));
    children.push_back(make_cotree(rng, left, level + 1, max_depth));
    children.push_back(make_cotree(rng, n - left, level + 1, max_depth));
  }
  return use_join ? join(children) : disjoint_union(children);
}

Graph make_gnp(int n, std::uint64_t seed, int percent)
{
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (draw(rng, 100) < static_cast<std::uint64_t>(percent))
        edges.emplace_back(u, v);
  return Graph(n, edges);
}

// K_n on 0..n-1 with pendant n on vertex 0 and pendant n+1 on vertex 1.
Graph make_theorem9(int n)
{
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      edges.emplace_back(u, v);
  edges.emplace_back(0, n);
  edges.emplace_back(1, n + 1);
  return Graph(n + 2, edges);
}

}  // namespace

FamilySpec parse_family(std::string_view text)
{
  return DslParser(text).parse_all();
}

Graph generate(const FamilySpec& spec)
{
  spec.validate();
  switch (spec.kind) {
    case FamilyKind::path: return make_path(spec.n);
    case FamilyKind::cycle: return make_cycle(spec.n);
    case FamilyKind::complete: return make_complete(spec.n);
    case FamilyKind::star: return make_star(spec.n);
    case FamilyKind::tree: return make_tree(spec.n, spec.seed);
    case FamilyKind::cograph: {
      std::mt19937_64 rng(spec.seed);
      return make_cotree(rng, spec.n, 0, spec.depth);
    }
    case FamilyKind::theorem9: return make_theorem9(spec.n);
    case FamilyKind::gnp: return make_gnp(spec.n, spec.seed, spec.percent);
    case FamilyKind::edges: return Graph(spec.n, spec.edge_list);
    case FamilyKind::disconnected:
    case FamilyKind::join: {
      std::vector<Graph> parts;
      for (const auto& p : spec.parts)
        parts.push_back(generate(p));
      return spec.kind == FamilyKind::join ? join(parts) : disjoint_union(parts);
    }
    case FamilyKind::complement: return complement(generate(spec.parts.front()));
    case FamilyKind::prism: return complementary_prism(generate(spec.parts.front()));
  }
  throw std::logic_error("unhandled family kind");
}

}  // namespace prismhull
