#include "broadexp/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace broadexp {

Interval operator*(const Interval& a, const Interval& b) {
  Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_;
  Rational p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
  return Interval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero())
    throw std::domain_error("Interval: division by an interval containing 0");
  Interval inv(b.hi_.inverse(), b.lo_.inverse());
  return a * inv;
}

Interval Interval::abs() const {
  if (lo_.sign() >= 0) return *this;
  if (hi_.sign() <= 0) return -*this;
  return Interval(Rational(0), std::max(-lo_, hi_));
}

// Power of a dyadic bound kept exact: these helpers only ever see small
// exponents (2 or 3).
static Rational int_pow(const Rational& x, int e) {
  Rational acc(1);
  for (int i = 0; i < e; ++i) acc *= x;
  return acc;
}

// Dyadic bisection for the increasing map t -> t^e on t >= 0.  The bracket
// endpoints stay dyadic rationals, so every step is cheap and exact.  If the
// midpoint ever hits the root exactly, a positive-width enclosure around it
// is returned rather than the bare rational.
static Interval nth_root(const Rational& x, int e, int precision_bits) {
  if (precision_bits < 1)
    throw std::domain_error("nth_root: need precision >= 1 bit");
  if (x.is_zero()) return Interval(Rational(0));
  if (x.sign() < 0) {
    if (e % 2 == 0)
      throw std::domain_error("nth_root: even root of a negative number");
    return -nth_root(-x, e, precision_bits);
  }
  Rational target(1);
  for (int i = 0; i < precision_bits; ++i) target /= 2;

  Rational lo(0), hi(1);
  while (int_pow(hi, e) < x) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > target) {
    Rational mid = (lo + hi) / 2;
    Rational diff = int_pow(mid, e) - x;
    if (diff.is_zero()) {
      Rational pad = target / 2;
      Rational left = mid - pad;
      if (left.sign() < 0) left = Rational(0);
      return Interval(left, mid + pad);
    }
    (diff.sign() < 0 ? lo : hi) = mid;
  }
  return Interval(lo, hi);
}

Interval sqrt_enclosure(const Rational& x, int precision_bits) {
  if (x.sign() < 0)
    throw std::domain_error("sqrt_enclosure: negative operand");
  return nth_root(x, 2, precision_bits);
}

Interval cbrt_enclosure(const Rational& x, int precision_bits) {
  return nth_root(x, 3, precision_bits);
}

}  // namespace broadexp
