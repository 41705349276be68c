#include "symgame/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace symgame {

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  // Grammar: [+-] digits [ "/" digits ]. Anything else (whitespace,
  // '.', 'e', a signed denominator) is rejected.
  std::size_t i = 0;
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  std::size_t rest = num_end;
  if (rest < text.size()) {
    if (text[rest] != '/')
      throw std::invalid_argument("Rational: cannot parse '" + text +
                                  "' (only integers and p/q are accepted)");
    std::size_t den_end = digits(rest + 1);
    if (den_end == rest + 1 || den_end != text.size())
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    if (mpz_class(text.substr(rest + 1), 10) == 0)
      throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
  }
  // base fixed to 10: the default base 0 would read leading zeros as octal
  mpq_class v(text[0] == '+' ? text.substr(1) : text, 10);
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const {
  return value_.get_str();
}

std::string Rational::decimal(int digits) const {
  if (digits < 0 || digits > 30) throw std::invalid_argument("Rational::decimal: digits out of range");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class num = numerator();
  const bool negative = num < 0;
  if (negative) num = -num;
  num *= scale;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), denominator().get_mpz_t());
  if (2 * r >= denominator()) q += 1;
  mpz_class whole = q / scale;
  mpz_class frac = q % scale;
  std::string out;
  if (negative && q != 0) out += '-';
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) { value_ += o.value_; return *this; }
Rational& Rational::operator-=(const Rational& o) { value_ -= o.value_; return *this; }
Rational& Rational::operator*=(const Rational& o) { value_ *= o.value_; return *this; }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0; }
bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t()) < 0; }
bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t()) <= 0; }
bool operator>(const Rational& a, const Rational& b) { return b < a; }
bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace symgame
