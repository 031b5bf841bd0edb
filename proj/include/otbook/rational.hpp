#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "otbook/errors.hpp"

namespace otbook {

using Integer = std::int64_t;

namespace checked {

inline Integer add(Integer a, Integer b) {
  Integer r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in addition");
  return r;
}

inline Integer sub(Integer a, Integer b) {
  Integer r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in subtraction");
  return r;
}

inline Integer mul(Integer a, Integer b) {
  Integer r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
  return r;
}

inline Integer neg(Integer a) { return sub(0, a); }

// Narrow a 128-bit intermediate back to 64 bits.
inline Integer narrow(__int128 v) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
    throw ArithmeticOverflow("integer overflow narrowing 128-bit intermediate");
  return static_cast<Integer>(v);
}

}  // namespace checked

// Floor and ceiling of a/b for b > 0.
Integer floor_div(Integer a, Integer b);
Integer ceil_div(Integer a, Integer b);

// Mathematical residue in [0, m) for m > 0.
Integer mod(Integer a, Integer m);

// Modular inverse of a mod m; throws DomainError if gcd(a, m) != 1.
Integer mod_inverse(Integer a, Integer m);

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Backed by 64-bit integers with 128-bit intermediates. Any result that does
/// not fit raises ArithmeticOverflow instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Integer n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer n, Integer d);

  Integer num() const { return num_; }
  Integer den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Integer floor() const { return floor_div(num_, den_); }
  Integer ceil() const { return ceil_div(num_, den_); }

  Rational reciprocal() const;
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p/q", or "p" when the denominator is 1.
  std::string str() const;
  // Accepts "p", "p/q", with optional sign and surrounding whitespace.
  static Rational parse(std::string_view text);

 private:
  static Rational from_wide(__int128 n, __int128 d);

  Integer num_ = 0;
  Integer den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace otbook
