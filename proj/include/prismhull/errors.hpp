#ifndef PRISMHULL_ERRORS_HPP
#define PRISMHULL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prismhull {

/// Malformed edge list or family expression. The message names the token.
class ParseError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A vertex index outside the graph it refers to.
class RangeError : public std::out_of_range
{
public:
  using std::out_of_range::out_of_range;
};

/// Input larger than the exact solver is allowed to search.
class CapError : public std::runtime_error
{
public:
  CapError(int order, int cap)
    : std::runtime_error("graph has " + std::to_string(order)
                         + " vertices, exceeding max-vertices cap " + std::to_string(cap)),
      order_(order), cap_(cap) {}

  int order() const { return order_; }
  int cap() const { return cap_; }

private:
  int order_;
  int cap_;
};

}  // namespace prismhull

#endif
