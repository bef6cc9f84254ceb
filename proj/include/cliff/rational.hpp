#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cliff {

// Exact rational number, always kept in lowest terms with a positive
// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(const mpq_class &value) : value_(value) { value_.canonicalize(); }

  // Accepts "a" or "a/b" with optional sign on the numerator; whitespace
  // around the tokens is ignored. Throws Error(Parse) on malformed input or a
  // zero denominator.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  bool is_one() const { return value_ == 1; }

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }

  // "a" when integral, "a/b" otherwise.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  // Exact square root when both numerator and denominator are perfect
  // squares and the value is non-negative.
  std::optional<Rational> exact_sqrt() const;

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  const mpq_class &raw() const { return value_; }

  Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
  Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
  Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class value_;
};

} // namespace cliff
