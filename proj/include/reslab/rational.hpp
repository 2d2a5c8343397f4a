#ifndef RESLAB_RATIONAL_HPP
#define RESLAB_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace reslab {

/// Exact rational number over 64-bit integers.
/// Always stored reduced (gcd(|num|, den) = 1) with positive denominator.
/// Arithmetic runs through 128-bit intermediates and throws
/// std::overflow_error if a reduced result leaves the 64-bit range.
class Rational {
 public:
  using Int = long long;

  constexpr Rational() = default;
  Rational(Int n) : num_(n) {}  // NOLINT: implicit from integers is intended
  Rational(Int n, Int d) { *this = make(n, d); }

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make128(I128(a.num_) * b.den_ + I128(b.num_) * a.den_,
                   I128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make128(I128(a.num_) * b.den_ - I128(b.num_) * a.den_,
                   I128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make128(I128(a.num_) * b.num_, I128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational: division by zero");
    return make128(I128(a.num_) * b.den_, I128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    I128 lhs = I128(a.num_) * b.den_;
    I128 rhs = I128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "3", "-1/2", ...
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  using I128 = __int128;

  Int num_{0};
  Int den_{1};

  static Rational make(Int n, Int d) { return make128(n, d); }

  static Rational make128(I128 n, I128 d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    I128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  static I128 gcd128(I128 a, I128 b) {
    while (b != 0) {
      I128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Int narrow(I128 v) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
      throw std::overflow_error("rational: 64-bit overflow");
    return static_cast<Int>(v);
  }
};

}  // namespace reslab

#endif
