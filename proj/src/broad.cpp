#include "broadexp/broad.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace broadexp {
namespace detail {

const mpz_class& factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  static std::vector<mpz_class> table{mpz_class(1)};  // table[i] = i!
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<long>(table.size()) <= n)
    table.push_back(table.back() * static_cast<long>(table.size()));
  return table[static_cast<size_t>(n)];
}

mpz_class prod_range(long lo, long hi) {
  if (lo > hi) return 1;
  if (hi - lo < 8) {
    mpz_class acc(1);
    for (long i = lo; i <= hi; ++i) acc *= i;
    return acc;
  }
  long mid = lo + (hi - lo) / 2;
  return prod_range(lo, mid) * prod_range(mid + 1, hi);
}

mpz_class prod_odd_range(long lo, long hi) {
  if (lo > hi) return 1;
  if (hi - lo < 8) {
    mpz_class acc(1);
    for (long i = lo; i <= hi; ++i) acc *= 2 * i + 1;
    return acc;
  }
  long mid = lo + (hi - lo) / 2;
  return prod_odd_range(lo, mid) * prod_odd_range(mid + 1, hi);
}

std::pair<mpz_class, mpz_class> dyadic_product_parts(long k, long n) {
  mpz_class num;
  mpz_ui_pow_ui(num.get_mpz_t(), 2, static_cast<unsigned long>(n - k));
  num *= prod_range(k, n - 1);
  return {num, prod_odd_range(k, n - 1)};
}

}  // namespace detail

static void require_kn(int k, int n) {
  if (!(2 <= k && k <= n))
    throw std::domain_error("broad exponent: need 2 <= k <= n, got k=" +
                            std::to_string(k) + ", n=" + std::to_string(n));
}

Rational dyadic_product(int k, int n) {
  require_kn(k, n);
  auto [num, den] = detail::dyadic_product_parts(k, n);
  return Rational(num, den);
}

Rational dyadic_product_factorial(int k, int n) {
  require_kn(k, n);
  mpz_class pow4;
  mpz_ui_pow_ui(pow4.get_mpz_t(), 4, static_cast<unsigned long>(n - k));
  mpz_class ratio = detail::factorial(n - 1) / detail::factorial(k - 1);
  mpz_class num = pow4 * ratio * ratio * detail::factorial(2 * k - 1);
  return Rational(num, detail::factorial(2 * n - 1));
}

BroadExponent p_broad(int n, int k) {
  require_kn(k, n);
  BroadExponent rec;
  rec.n = n;
  rec.k = k;
  rec.product = dyadic_product(k, n);
  Rational denom = Rational(2 * (n - 1)) + Rational(k - 1) * rec.product;
  rec.p = Rational(2) + Rational(6) / denom;
  rec.k_at_boundary = (k == n);
  if (!rec.k_at_boundary) {
    auto [lo, hi] = appendix_product_bounds(n, k);
    rec.lower_ok = lo;
    rec.upper_ok = hi;
  }
  return rec;
}

bool chain_inequality_check(long i) {
  if (i < 1) throw std::domain_error("chain_inequality_check: need i >= 1");
  Rational left(2 * i + 1, 2 * i + 3);
  Rational middle = Rational(2 * i, 2 * i + 1) * Rational(2 * (i + 1), 2 * i + 3);
  Rational right(i, i + 1);
  return left >= middle && middle >= right;
}

std::pair<bool, bool> appendix_product_bounds(int n, int k) {
  if (!(2 <= k && k < n))
    throw std::domain_error("appendix_product_bounds: need 2 <= k < n");
  Rational prod = dyadic_product(k, n);
  Rational squared = prod * prod;
  Rational lower(mpz_class(k) * k * (2 * n + 1), mpz_class(2 * k + 1) * n * n);
  Rational upper(k, n);
  return {squared >= lower, squared <= upper};
}

}  // namespace broadexp
