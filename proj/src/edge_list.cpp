#include "prismhull/edge_list.hpp"

#include "prismhull/errors.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace prismhull {

namespace {

struct LineReader
{
  std::istream& in;
  int line_no = 0;

  // Next non-blank, non-comment line split into tokens.
  bool next(std::vector<std::string>& tokens)
  {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      std::istringstream ss(line);
      tokens.clear();
      std::string tok;
      while (ss >> tok)
        tokens.push_back(tok);
      if (tokens.empty() || tokens.front().front() == '#')
        continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const
  {
    throw ParseError("edge list line " + std::to_string(line_no) + ": " + what);
  }

  long to_int(const std::string& tok) const
  {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(tok, &used);
    } catch (const std::exception&) {
      fail("malformed integer '" + tok + "'");
    }
    if (used != tok.size())
      fail("malformed integer '" + tok + "'");
    return value;
  }
};

}  // namespace

Graph read_edge_list(std::istream& in)
{
  LineReader reader{in};
  std::vector<std::string> tokens;
  if (!reader.next(tokens))
    throw ParseError("edge list: missing header line 'n m'");
  if (tokens.size() != 2)
    reader.fail("header must be 'n m', got " + std::to_string(tokens.size()) + " tokens");
  const long n = reader.to_int(tokens[0]);
  const long m = reader.to_int(tokens[1]);
  if (n < 0)
    reader.fail("negative vertex count '" + tokens[0] + "'");
  if (m < 0)
    reader.fail("negative edge count '" + tokens[1] + "'");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (long i = 0; i < m; ++i) {
    if (!reader.next(tokens))
      throw ParseError("edge list: expected " + std::to_string(m) + " edges, found "
                       + std::to_string(i));
    if (tokens.size() != 2)
      reader.fail("edge must be 'u v', got " + std::to_string(tokens.size()) + " tokens");
    const long u = reader.to_int(tokens[0]);
    const long v = reader.to_int(tokens[1]);
    for (const auto& [value, tok] : {std::pair{u, tokens[0]}, std::pair{v, tokens[1]}})
      if (value < 0 || value >= n)
        throw RangeError("edge list line " + std::to_string(reader.line_no) + ": vertex '" + tok
                         + "' outside [0, " + std::to_string(n) + ")");
    if (u >= v)
      reader.fail("edge '" + tokens[0] + " " + tokens[1] + "' must satisfy u < v");
    Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(e).second)
      reader.fail("duplicate edge '" + tokens[0] + " " + tokens[1] + "'");
    edges.push_back(e);
  }
  if (reader.next(tokens))
    reader.fail("unexpected content after " + std::to_string(m) + " edges: '" + tokens.front() + "'");
  return Graph(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges())
    out << u << ' ' << v << '\n';
}

}  // namespace prismhull
