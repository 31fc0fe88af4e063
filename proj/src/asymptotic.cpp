#include "broadexp/asymptotic.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace broadexp {

static Rational cubic_value(const Rational& t) {
  return Rational(2) * t * t * t + Rational(3) * t * t - Rational(2);
}

Interval solve_cubic(int precision_bits) {
  if (precision_bits < 1)
    throw std::domain_error("solve_cubic: need precision >= 1 bit");
  Rational target(1);
  for (int i = 0; i < precision_bits; ++i) target /= 2;
  // f(0) = -2 < 0 < 3 = f(1) and f is strictly increasing on (0, 1).
  Rational lo(0), hi(1);
  while (hi - lo > target) {
    Rational mid = (lo + hi) / 2;
    Rational value = cubic_value(mid);
    if (value.is_zero()) {
      Rational pad = target / 2;
      return Interval(mid - pad, mid + pad);
    }
    (value.sign() < 0 ? lo : hi) = mid;
  }
  return Interval(lo, hi);
}

// Monotone image of an interval under the real cube root.
static Interval cbrt_interval(const Interval& x, int precision_bits) {
  Interval lo = cbrt_enclosure(x.lo(), precision_bits);
  Interval hi = cbrt_enclosure(x.hi(), precision_bits);
  return Interval(lo.lo(), hi.hi());
}

Interval cardano_root(int precision_bits) {
  if (precision_bits < 1)
    throw std::domain_error("cardano_root: need precision >= 1 bit");
  // Guard bits absorb the error amplification of the cube root near the
  // small summand 3/8 - 1/sqrt(8) ~ 0.0214 (derivative ~ 4.3 there).
  int guard = precision_bits + 8;
  Interval s = sqrt_enclosure(Rational(1, 8), guard);
  Interval three_eighths(Rational(3, 8));
  Interval u = cbrt_interval(three_eighths + s, guard);
  Interval v = cbrt_interval(three_eighths - s, guard);
  return u + v - Interval(Rational(1, 2));
}

NuLambda nu_lambda(int precision_bits) {
  if (precision_bits < 1)
    throw std::domain_error("nu_lambda: need precision >= 1 bit");
  Interval root = solve_cubic(precision_bits + 16);
  NuLambda result;
  result.nu = root * root;
  result.lambda = Interval(Rational(4)) / (Interval(Rational(2)) - result.nu);
  return result;
}

Rational tomas_gap(long n) {
  if (n < 2) throw std::domain_error("tomas_gap: need n >= 2");
  return Rational(4 * n, n - 1);
}

std::vector<RegistryEntry> lambda_registry() {
  return {
      {"Tomas", "4"},
      {"Bourgain-Guth", "3"},
      {"Guth", "8/3"},
      {"Hickman-Rogers", "2.604"},
  };
}

std::vector<FitPoint> asymptotic_fit(long n_lo, long n_hi, int max_points,
                                     int precision_bits) {
  if (!(3 <= n_lo && n_lo <= n_hi))
    throw std::domain_error("asymptotic_fit: need 3 <= n_lo <= n_hi");
  if (n_hi > 100000)
    throw ResourceError("asymptotic_fit: n above 10^5 exceeds the budget");
  if (max_points < 1)
    throw std::domain_error("asymptotic_fit: need max_points >= 1");

  std::set<long> grid;
  long range = n_hi - n_lo + 1;
  if (range <= max_points) {
    for (long n = n_lo; n <= n_hi; ++n) grid.insert(n);
  } else {
    // Geometric spacing; rounding collisions are absorbed by the set.
    double ratio = static_cast<double>(n_hi) / static_cast<double>(n_lo);
    for (int t = 0; t < max_points; ++t) {
      double frac = max_points == 1 ? 0.0
                                    : static_cast<double>(t) / (max_points - 1);
      long n = std::lround(n_lo * std::pow(ratio, frac));
      grid.insert(std::min(std::max(n, n_lo), n_hi));
    }
    grid.insert(n_lo);
    grid.insert(n_hi);
  }

  Interval lambda = nu_lambda(precision_bits).lambda;
  std::vector<FitPoint> points;
  for (long n : grid) {
    LinearResult lin = linear_exponent(static_cast<int>(n));
    FitPoint pt;
    pt.n = n;
    pt.k_opt = lin.k_opt;
    pt.gap = Rational(n) * (lin.p - Rational(2));
    pt.deviation_enclosure = (Interval(pt.gap) - lambda).abs();
    pt.deviation = decimal_str(pt.deviation_enclosure.hi(), 15, +1);
    pt.k_ratio = static_cast<double>(lin.k_opt) / static_cast<double>(n);
    points.push_back(std::move(pt));
  }
  return points;
}

std::string asymptotic_csv(const std::vector<FitPoint>& points) {
  std::ostringstream out;
  out << "n,k_opt,gap_num,gap_den,deviation_decimal_string\n";
  for (const auto& pt : points)
    out << pt.n << ',' << pt.k_opt << ',' << pt.gap.num() << ','
        << pt.gap.den() << ',' << pt.deviation << "\n";
  return out.str();
}

}  // namespace broadexp
