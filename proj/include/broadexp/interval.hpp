#pragma once

#include <string>

#include "broadexp/rational.hpp"

namespace broadexp {

// Closed interval with exact rational endpoints — the representation of a
// real number known to finite precision.  Every operation returns an
// enclosure of the exact image, so containment facts survive arithmetic.
class Interval {
 public:
  Interval() = default;
  explicit Interval(const Rational& point) : lo_(point), hi_(point) {}
  Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::domain_error("Interval: lo > hi");
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool intersects(const Interval& other) const {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
  }
  bool contains_zero() const { return contains(Rational(0)); }

  Interval operator-() const { return Interval(-hi_, -lo_); }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return a + (-b);
  }
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  Interval abs() const;

  // "[lo, hi]" with the endpoints rendered to `digits` decimal places,
  // lo rounded down and hi rounded up, so the printed window still encloses.
  std::string str(int digits = 20) const {
    return "[" + decimal_str(lo_, digits, -1) + ", " +
           decimal_str(hi_, digits, +1) + "]";
  }

 private:
  Rational lo_, hi_;
};

// Enclosure of x^(1/2) of width <= 2^-precision_bits via dyadic bisection.
// Requires x >= 0.
Interval sqrt_enclosure(const Rational& x, int precision_bits);

// Enclosure of the real cube root, defined for negative x as well.
Interval cbrt_enclosure(const Rational& x, int precision_bits);

}  // namespace broadexp
