#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace symgame {

/// Exact rational scalar.
///
/// Always stored in lowest terms with a positive denominator. Every
/// operation is exact; floating point appears only when explicitly
/// rendering (decimal(), to_double()).
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int n) : value_(n) {}        // NOLINT: implicit for literals
  Rational(long n) : value_(n) {}       // NOLINT
  Rational(long long n) : Rational(n, 1) {}  // NOLINT
  Rational(long long num, long long den);

  /// Parses "p", "-p", or "p/q" (q > 0 after reduction). Decimal and
  /// scientific notation are rejected to preserve exactness.
  static Rational parse(const std::string& text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Exact form: "p" when integral, else "p/q".
  std::string str() const;

  /// Fixed-point rendering with `digits` fractional digits, rounded to
  /// nearest (ties away from zero). digits must be in 0..30.
  std::string decimal(int digits) const;

  double to_double() const { return value_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on division by zero

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b);
  friend bool operator>=(const Rational& a, const Rational& b);

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;  // canonical: lowest terms, denominator > 0
};

Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace symgame
