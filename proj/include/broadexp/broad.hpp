#pragma once

#include <utility>

#include "broadexp/rational.hpp"

namespace broadexp {

// k-broad restriction exponent at dimension n and transversality degree k,
// together with the product it is built from and the certificate that the
// product respects its a-priori bounds.
struct BroadExponent {
  int n = 0;
  int k = 0;
  Rational product;  // prod_{i=k}^{n-1} 2i/(2i+1), empty product = 1 at k = n
  Rational p;        // 2 + 6/(2(n-1) + (k-1)*product)
  bool lower_ok = true;       // product^2 >= k^2 (2n+1) / ((2k+1) n^2)
  bool upper_ok = true;       // product^2 <= k/n
  bool k_at_boundary = false; // k == n; the bound certificate is vacuous there
};

// prod_{i=k}^{n-1} 2i/(2i+1) as an exact rational.  Requires 2 <= k <= n;
// the empty product at k = n is 1.
Rational dyadic_product(int k, int n);

// The same product in closed form: 4^(n-k) * ((n-1)!/(k-1)!)^2 * (2k-1)!/(2n-1)!.
Rational dyadic_product_factorial(int k, int n);

// The k-broad exponent record.  Requires 2 <= k <= n.
BroadExponent p_broad(int n, int k);

// Exact check of the telescoping chain step
//   (2i+1)/(2i+3) >= (2i/(2i+1)) * (2(i+1)/(2i+3)) >= i/(i+1)
// for i >= 1.  Returns true iff both inequalities hold.
bool chain_inequality_check(long i);

// Certifies k^2 (2n+1) / ((2k+1) n^2) <= product^2 <= k/n for 2 <= k <= n-1.
// Returns (lower_ok, upper_ok).
std::pair<bool, bool> appendix_product_bounds(int n, int k);

namespace detail {

// n! with a process-wide memo table (guarded by a mutex); n >= 0.
const mpz_class& factorial(long n);

// prod_{i=lo}^{hi} i via balanced range splitting; 1 when lo > hi.
mpz_class prod_range(long lo, long hi);

// prod_{i=lo}^{hi} (2i+1), same conventions.
mpz_class prod_odd_range(long lo, long hi);

// Unreduced numerator/denominator of dyadic_product(k, n); cheaper than the
// canonicalized Rational for sweep and bracket-search callers.
std::pair<mpz_class, mpz_class> dyadic_product_parts(long k, long n);

}  // namespace detail

}  // namespace broadexp
