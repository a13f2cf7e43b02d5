#ifndef PRISMHULL_VERTEX_SET_HPP
#define PRISMHULL_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <string>
#include <vector>

namespace prismhull {

using Vertex = int;

/**
 * Subset of the vertices 0..n-1 of some graph, stored as a packed bitset.
 *
 * The universe size is part of the value: two sets compare equal only if
 * they share the universe and the members. Binary set operations require
 * matching universes.
 */
class VertexSet
{
public:
  class const_iterator
  {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* owner, std::size_t word, std::uint64_t bits)
      : owner_(owner), word_(word), bits_(bits) { settle(); }

    Vertex operator*() const {
      return static_cast<Vertex>(word_ * 64 + std::countr_zero(bits_));
    }
    const_iterator& operator++() {
      bits_ &= bits_ - 1;
      settle();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const {
      return word_ == other.word_ && bits_ == other.bits_;
    }

  private:
    void settle();

    const VertexSet* owner_ = nullptr;
    std::size_t word_ = 0;
    std::uint64_t bits_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, const std::vector<Vertex>& members);

  static VertexSet full(int universe);
  /// Builds a set from the low `universe` bits of `mask`; universe must be <= 64.
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const { return universe_; }
  int size() const;
  bool empty() const;
  bool contains(Vertex v) const;

  void insert(Vertex v);
  void erase(Vertex v);

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  /// Complement within the universe.
  VertexSet complement() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& other) const = default;

  /// Lexicographic comparison of the ascending member sequences.
  static bool lex_less(const VertexSet& a, const VertexSet& b);

  std::vector<Vertex> members() const;
  /// Packed members for universes of at most 64 vertices.
  std::uint64_t to_mask() const;

  /// Renders as "{0,2,5}" with members ascending.
  std::string to_string() const;

  const_iterator begin() const { return {this, 0, words_.empty() ? 0 : words_[0]}; }
  const_iterator end() const { return {nullptr, words_.size(), 0}; }

private:
  friend class const_iterator;

  void check_vertex(Vertex v) const;
  void check_universe(const VertexSet& other) const;
  void trim();

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

inline void VertexSet::const_iterator::settle()
{
  while (bits_ == 0 && owner_ != nullptr && word_ + 1 < owner_->words_.size())
    bits_ = owner_->words_[++word_];
  if (bits_ == 0 && owner_ != nullptr)
    word_ = owner_->words_.size();
}

}  // namespace prismhull

#endif
