#include "otbook/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

namespace otbook {

namespace {

unsigned __int128 ugcd(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

unsigned __int128 uabs(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Integer v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("malformed rational '" + std::string(whole) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

}  // namespace

Integer floor_div(Integer a, Integer b) {
  if (b <= 0) throw DomainError("floor_div requires a positive divisor");
  Integer q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

Integer ceil_div(Integer a, Integer b) {
  if (b <= 0) throw DomainError("ceil_div requires a positive divisor");
  Integer q = a / b;
  if ((a % b != 0) && (a > 0)) ++q;
  return q;
}

Integer mod(Integer a, Integer m) {
  if (m <= 0) throw DomainError("mod requires a positive modulus");
  Integer r = a % m;
  return r < 0 ? r + m : r;
}

Integer mod_inverse(Integer a, Integer m) {
  if (m == 1) return 0;
  Integer old_r = mod(a, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw DomainError("no modular inverse: gcd != 1");
  return mod(old_s, m);
}

Rational::Rational(Integer n, Integer d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d == 0) throw DomainError("division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  unsigned __int128 g = ugcd(uabs(n), uabs(d));
  if (g > 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  Rational r;
  r.num_ = checked::narrow(n);
  r.den_ = checked::narrow(d);
  return r;
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw DomainError("reciprocal of zero");
  return from_wide(den_, num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked::neg(num_);
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ = checked::add(num_, o.num_);
    return *this;
  }
  Integer g = std::gcd(den_, o.den_);
  __int128 n = static_cast<__int128>(num_) * (o.den_ / g) + static_cast<__int128>(o.num_) * (den_ / g);
  __int128 d = static_cast<__int128>(den_) * (o.den_ / g);
  return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ = checked::mul(num_, o.num_);
    return *this;
  }
  Integer g1 = std::gcd(num_, o.den_);
  Integer g2 = std::gcd(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
  __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
  return *this = from_wide(n, d);
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.reciprocal(); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  Integer n = parse_integer(trim(s.substr(0, slash)), text);
  Integer d = parse_integer(trim(s.substr(slash + 1)), text);
  if (d == 0) throw DomainError("malformed rational '" + std::string(text) + "': zero denominator");
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace otbook
