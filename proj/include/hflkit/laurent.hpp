#ifndef HFLKIT_LAURENT_HPP
#define HFLKIT_LAURENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "hflkit/half_int.hpp"
#include "hflkit/int_matrix.hpp"

namespace hflkit {

/// Integer Laurent polynomial in t with exponents in (1/2)Z.
///
/// Only nonzero coefficients are stored, so the zero polynomial has empty
/// support and structural equality is polynomial equality.
class LaurentPoly {
public:
  using Terms = std::map<HalfInt, BigInt>;

  LaurentPoly() = default;

  static LaurentPoly constant(const BigInt& c);
  static LaurentPoly monomial(const BigInt& c, HalfInt exponent);
  static LaurentPoly from_terms(const Terms& terms);

  /// Parses text such as `t^-1 - 1 + t`, `2t^(3/2)`, `-t^-1/2`.
  /// Throws std::invalid_argument with a position on malformed input.
  static LaurentPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(HalfInt exponent) const;

  std::optional<HalfInt> min_exponent() const;
  std::optional<HalfInt> max_exponent() const;

  /// True iff the polynomial is ±t^k for some k.
  bool is_unit() const;

  /// p(t) == p(t^{-1}).
  bool is_symmetric() const;

  /// Value at t = 1.
  BigInt value_at_one() const;

  /// Value at t = -1; requires integral exponents.
  BigInt value_at_minus_one() const;

  /// Rendered ascending, e.g. `t^-2 - t^-1 + 1 - t + t^2`.
  std::string to_string() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
  void accumulate(HalfInt exponent, const BigInt& c);
  Terms terms_;
};

LaurentPoly laurent_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q);

/// p(t^n). With n = 0 every exponent collapses and the result is p(1).
LaurentPoly laurent_substitute(const LaurentPoly& p, std::int64_t n);

/// p * t^shift.
LaurentPoly laurent_shift(const LaurentPoly& p, HalfInt shift);

/// True iff p = ±t^k q for some k in (1/2)Z.
bool laurent_equal_up_to_unit(const LaurentPoly& p, const LaurentPoly& q);

/// The representative of p's unit class with p(t) = p(t^{-1}) and positive
/// top coefficient. Throws std::domain_error if p cannot be centred that way.
LaurentPoly laurent_symmetrize(const LaurentPoly& p);

}  // namespace hflkit

#endif  // HFLKIT_LAURENT_HPP
