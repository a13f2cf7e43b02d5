#ifndef PRISMHULL_DISTANCE_HPP
#define PRISMHULL_DISTANCE_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace prismhull {

/**
 * Hop count between two vertices, or "unreachable". Unreachable orders
 * above every finite distance, so max/compare over mixed values behave
 * like extended naturals.
 */
class Distance
{
public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint32_t hops) : hops_(hops) {
    if (hops == kSentinel)
      throw std::invalid_argument("finite distance collides with the unreachable sentinel");
  }

  static constexpr Distance unreachable() {
    Distance d;
    d.hops_ = kSentinel;
    return d;
  }

  constexpr bool finite() const { return hops_ != kSentinel; }

  /// Finite hop count; calling this on an unreachable distance throws.
  constexpr std::uint32_t hops() const {
    if (!finite())
      throw std::logic_error("hop count of an unreachable distance");
    return hops_;
  }

  constexpr auto operator<=>(const Distance&) const = default;

private:
  static constexpr std::uint32_t kSentinel = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t hops_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Distance d)
{
  if (!d.finite())
    return os << "inf";
  return os << d.hops();
}

}  // namespace prismhull

#endif
