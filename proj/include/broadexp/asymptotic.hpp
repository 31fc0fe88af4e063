#pragma once

#include <string>
#include <vector>

#include "broadexp/interval.hpp"
#include "broadexp/linear.hpp"

namespace broadexp {

// Enclosure of the unique real root of 2x^3 + 3x^2 - 2 (it lies in (0, 1)),
// of width <= 2^-precision_bits, by exact bisection.  The enclosure always
// has positive width and endpoints that are not roots: the root is
// irrational (the polynomial is irreducible over Q), and the solver never
// reports an exact rational even if a midpoint were to land on a root.
Interval solve_cubic(int precision_bits);

// The same number through the radical expression
//   (3/8 + 1/sqrt(8))^(1/3) + (3/8 - 1/sqrt(8))^(1/3) - 1/2,
// evaluated in interval arithmetic with guard bits; independent of the
// bisection path, so the two enclosures cross-check each other.
Interval cardano_root(int precision_bits);

struct NuLambda {
  Interval nu;      // square of the cubic root
  Interval lambda;  // 4/(2 - nu), equivalently 6/(2 + nu^(3/2))
};

// nu and the asymptotic coefficient lambda in p = 2 + lambda/n + O(1/n^2),
// each enclosed to width <= 2^-precision_bits.
NuLambda nu_lambda(int precision_bits);

struct FitPoint {
  long n = 0;
  int k_opt = 0;
  Rational gap;                  // n * (p_lin(n) - 2), exact
  Interval deviation_enclosure;  // |gap - lambda|
  std::string deviation;         // certified decimal upper bound on the above
  double k_ratio = 0;            // k_opt / n, converging to nu
};

// Exact optimizer gaps against lambda over a grid in [n_lo, n_hi]: every n
// when the range is small, otherwise a geometric grid of at most max_points
// values including both endpoints.  Requires 3 <= n_lo <= n_hi <= 10^5
// (ResourceError beyond).
std::vector<FitPoint> asymptotic_fit(long n_lo, long n_hi, int max_points = 64,
                                     int precision_bits = 128);

// Control sequence for the classical exponent 2 + 4/(n-1): its gap
// n*(p-2) = 4n/(n-1) converges to 4, not lambda.  Requires n >= 2.
Rational tomas_gap(long n);

struct RegistryEntry {
  std::string label;
  std::string lambda;  // exact string or published decimal
};

// Published milestones for the asymptotic coefficient, for context next to
// the computed enclosure.
std::vector<RegistryEntry> lambda_registry();

// CSV with columns n,k_opt,gap_num,gap_den,deviation_decimal_string.
std::string asymptotic_csv(const std::vector<FitPoint>& points);

}  // namespace broadexp
