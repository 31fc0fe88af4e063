#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace broadexp {

// Thrown when a computation would exceed a configured resource budget
// (lattice size, symbolic degree cap, ...).  Callers can distinguish these
// from domain errors, which signal bad inputs rather than big ones.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact rational number on top of GMP, always held in canonical form:
// reduced to lowest terms with a positive denominator.  Arithmetic never
// rounds.  Division by zero throws std::domain_error instead of trapping
// inside libgmp.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // implicit: lets `q + 2` read naturally
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : value_(n) {}

  // Parses "a/b" or "a"; throws std::invalid_argument on malformed input.
  static Rational from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    Rational r;
    r.value_ = q;
    return r;
  }

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(den(), num());
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // Canonical "a/b" (or just "a" for integers).
  std::string str() const { return value_.get_str(); }

  // Whole-part display used for exponents: 263/100 -> "2 + 63/100".
  // Integers print plainly; values below 1 fall back to str().
  std::string mixed_str() const {
    if (is_integer()) return str();
    if (sign() < 0) {
      Rational p = -*this;
      if (p < Rational(1)) return str();
      return "-(" + p.mixed_str() + ")";
    }
    mpz_class whole;
    mpz_fdiv_q(whole.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    if (whole == 0) return str();
    Rational frac = *this - Rational(whole);
    return whole.get_str() + " + " + frac.str();
  }

  double to_double() const { return value_.get_d(); }

 private:
  mpq_class value_;
};

// Decimal rendering with a controlled rounding direction so interval
// endpoints stay conservative: direction < 0 rounds toward -inf, > 0 toward
// +inf, 0 to nearest.  `digits` is the number of places after the point.
inline std::string decimal_str(const Rational& q, int digits, int direction = 0) {
  if (digits < 0) throw std::domain_error("decimal_str: negative digit count");
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled_num = q.num() * p10;
  mpz_class t;
  if (direction < 0) {
    mpz_fdiv_q(t.get_mpz_t(), scaled_num.get_mpz_t(), q.den().get_mpz_t());
  } else if (direction > 0) {
    mpz_cdiv_q(t.get_mpz_t(), scaled_num.get_mpz_t(), q.den().get_mpz_t());
  } else {
    mpz_class doubled = 2 * scaled_num + q.den();
    mpz_class den2 = 2 * q.den();
    mpz_fdiv_q(t.get_mpz_t(), doubled.get_mpz_t(), den2.get_mpz_t());
  }
  bool neg = t < 0;
  if (neg) t = -t;
  std::string body = t.get_str();
  if (static_cast<int>(body.size()) <= digits)
    body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
  if (digits > 0) body.insert(body.size() - static_cast<size_t>(digits), ".");
  return neg ? "-" + body : body;
}

}  // namespace broadexp
