#include "prismhull/vertex_set.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace prismhull {

namespace {

std::size_t word_count(int universe)
{
  return static_cast<std::size_t>((universe + 63) / 64);
}

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe)
{
  if (universe < 0)
    throw std::invalid_argument("vertex set universe must be non-negative");
  words_.assign(word_count(universe), 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
  : VertexSet(universe)
{
  for (Vertex v : members)
    insert(v);
}

VertexSet::VertexSet(int universe, const std::vector<Vertex>& members)
  : VertexSet(universe)
{
  for (Vertex v : members)
    insert(v);
}

VertexSet VertexSet::full(int universe)
{
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.trim();
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask)
{
  if (universe > 64)
    throw std::invalid_argument("from_mask requires a universe of at most 64 vertices");
  VertexSet s(universe);
  if (!s.words_.empty())
    s.words_[0] = mask;
  s.trim();
  return s;
}

int VertexSet::size() const
{
  int total = 0;
  for (auto w : words_)
    total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const
{
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool VertexSet::contains(Vertex v) const
{
  if (v < 0 || v >= universe_)
    return false;
  return (words_[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(Vertex v)
{
  check_vertex(v);
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v)
{
  check_vertex(v);
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

bool VertexSet::is_subset_of(const VertexSet& other) const
{
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i])
      return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const
{
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i])
      return true;
  return false;
}

VertexSet VertexSet::complement() const
{
  VertexSet s = *this;
  for (auto& w : s.words_)
    w = ~w;
  s.trim();
  return s;
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= ~other.words_[i];
  return *this;
}

bool VertexSet::lex_less(const VertexSet& a, const VertexSet& b)
{
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::vector<Vertex> VertexSet::members() const
{
  return {begin(), end()};
}

std::uint64_t VertexSet::to_mask() const
{
  if (universe_ > 64)
    throw std::invalid_argument("to_mask requires a universe of at most 64 vertices");
  return words_.empty() ? 0 : words_[0];
}

std::string VertexSet::to_string() const
{
  std::ostringstream os;
  os << *this;
  return os.str();
}

void VertexSet::check_vertex(Vertex v) const
{
  if (v < 0 || v >= universe_)
    throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size "
                            + std::to_string(universe_));
}

void VertexSet::check_universe(const VertexSet& other) const
{
  if (universe_ != other.universe_)
    throw std::invalid_argument("vertex sets over different universes ("
                                + std::to_string(universe_) + " vs "
                                + std::to_string(other.universe_) + ")");
}

void VertexSet::trim()
{
  if (universe_ % 64 != 0 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s)
{
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first)
      os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

}  // namespace prismhull
