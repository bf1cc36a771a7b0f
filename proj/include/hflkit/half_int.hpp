#ifndef HFLKIT_HALF_INT_HPP
#define HFLKIT_HALF_INT_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace hflkit {

/// Exact element of (1/2)Z, stored as twice its value.
///
/// Used for both Spin^c labels (which live in 1/2 + Z for the longitude
/// theory) and Maslov gradings. Ordering and equality are those of the
/// doubled integer.
class HalfInt {
public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(std::int64_t value) { return HalfInt(2 * value); }

  /// Parses `k`, `p/2` or `-p/2`. Throws std::invalid_argument on anything else.
  static HalfInt parse(std::string_view text);

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  /// Largest integer not exceeding the value.
  constexpr std::int64_t floor() const {
    return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2);
  }

  /// Canonical text: `k` for integers, `p/2` otherwise.
  std::string to_string() const;

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator*(HalfInt a, std::int64_t k) { return HalfInt(a.twice_ * k); }
  friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return HalfInt(a.twice_ * k); }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  friend std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

namespace literals {
/// `3_half` is 3/2.
constexpr HalfInt operator""_half(unsigned long long twice) {
  return HalfInt::from_twice(static_cast<std::int64_t>(twice));
}
}  // namespace literals

}  // namespace hflkit

template <>
struct std::hash<hflkit::HalfInt> {
  std::size_t operator()(hflkit::HalfInt h) const noexcept { return std::hash<std::int64_t>{}(h.twice()); }
};

#endif  // HFLKIT_HALF_INT_HPP
