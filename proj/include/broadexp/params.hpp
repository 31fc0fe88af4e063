#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "broadexp/broad.hpp"
#include "broadexp/polynomial.hpp"
#include "broadexp/rational.hpp"

namespace broadexp {

// Direction of the beta ratio.  `printed` is (1/2 - 1/p_i)/(1/2 - 1/p_0);
// `reciprocal` is its inverse, the direction under which the X_i = Y_i = 0
// identities verify exactly (and the only one keeping beta_i <= 1).
enum class BetaConvention { printed, reciprocal };

inline const char* to_string(BetaConvention c) {
  return c == BetaConvention::printed ? "printed" : "reciprocal";
}

// The full multigrain parameter system at codimension depth m.  The scalar S
// is Rational for fixed n or RationalFunction for symbolic n.  Vectors are
// stored with mathematical indexing: gamma[j] for 0 <= j <= m, sigma[i] for
// 1 <= i <= m+1 (slot 0 unused), p[i] and beta[i] for 0 <= i <= m, alpha[i]
// for 1 <= i <= m with alpha[0] = 1 by convention, X[i] for 1 <= i <= m and
// Y[i] for 1 <= i <= m+1 (slot 0 unused, kept zero).
template <class S>
struct MultigrainParamsT {
  S n;
  int m = 0;
  BetaConvention convention = BetaConvention::reciprocal;
  std::vector<S> gamma;
  std::vector<S> sigma;
  std::vector<S> p;
  std::vector<S> alpha;
  std::vector<S> beta;
  std::vector<S> X;
  std::vector<S> Y;
};

using MultigrainParams = MultigrainParamsT<Rational>;
using MultigrainParamsSymbolic = MultigrainParamsT<RationalFunction>;

// Builds the whole system from scratch:
//   gamma_j = ((n-m-1)/2) (1/((n-j)(n-j-1))) prod_{i=n-m}^{n-j} 2i/(2i+1),
//   gamma_0 = 1 - sum gamma_j,   sigma_i = sum_{j>=i} gamma_j,
//   (1/2 - 1/p_i)^{-1} = 2n - m - i + sum_{j>i} (j-i) gamma_j,
//   beta/alpha per the convention, and the residuals
//   X_i = (beta_{i-1} - beta_i)/2 - ((1+sigma_i)/2)(1/2 - 1/p_0),
//   Y_i = beta_{i-1}/2 - (1 + (n-i)(1-sigma_i))(1/2 - 1/p_0).
// Requires m >= 0; for fixed n additionally m <= n-2.
template <class S>
MultigrainParamsT<S> build_multigrain(const S& n, int m, BetaConvention convention) {
  if (m < 0) throw std::domain_error("build_multigrain: need m >= 0");
  MultigrainParamsT<S> sys;
  sys.n = n;
  sys.m = m;
  sys.convention = convention;

  const S one(1), two(2), half = one / two;

  // Prefix products P[t] = prod_{s=0}^{t-1} f(n-m+s) of f(i) = 2i/(2i+1),
  // so P[t] covers i = n-m .. n-m+t-1; the gamma_j product runs over the
  // inclusive range i = n-m .. n-j, which is m-j+1 factors, i.e. P[m-j+1].
  std::vector<S> prefix(static_cast<size_t>(m) + 1, one);
  for (int t = 0; t < m; ++t) {
    S two_i = two * (n - S(m) + S(t));
    prefix[static_cast<size_t>(t) + 1] =
        prefix[static_cast<size_t>(t)] * (two_i / (two_i + one));
  }

  sys.gamma.assign(static_cast<size_t>(m) + 1, S(0));
  S tail_sum(0);
  for (int j = 1; j <= m; ++j) {
    S denom = (n - S(j)) * (n - S(j) - one);
    sys.gamma[static_cast<size_t>(j)] =
        ((n - S(m) - one) / two) / denom * prefix[static_cast<size_t>(m - j) + 1];
    tail_sum = tail_sum + sys.gamma[static_cast<size_t>(j)];
  }
  sys.gamma[0] = one - tail_sum;

  // sigma_i = suffix sums of gamma; T_i = suffix sums of j*gamma_j let the
  // p_i correction sum close in O(1) per index.
  sys.sigma.assign(static_cast<size_t>(m) + 2, S(0));
  std::vector<S> weighted(static_cast<size_t>(m) + 2, S(0));
  for (int i = m; i >= 1; --i) {
    sys.sigma[static_cast<size_t>(i)] =
        sys.sigma[static_cast<size_t>(i) + 1] + sys.gamma[static_cast<size_t>(i)];
    weighted[static_cast<size_t>(i)] =
        weighted[static_cast<size_t>(i) + 1] + S(i) * sys.gamma[static_cast<size_t>(i)];
  }

  // a_i = 1/2 - 1/p_i, with sum_{j>i} (j-i) gamma_j = T_{i+1} - i sigma_{i+1}.
  std::vector<S> a(static_cast<size_t>(m) + 1, S(0));
  sys.p.assign(static_cast<size_t>(m) + 1, S(0));
  for (int i = 0; i <= m; ++i) {
    S correction = weighted[static_cast<size_t>(i) + 1] -
                   S(i) * sys.sigma[static_cast<size_t>(i) + 1];
    S reciprocal = two * n - S(m) - S(i) + correction;
    a[static_cast<size_t>(i)] = one / reciprocal;
    sys.p[static_cast<size_t>(i)] = two / (one - two * a[static_cast<size_t>(i)]);
  }

  sys.beta.assign(static_cast<size_t>(m) + 1, one);
  sys.alpha.assign(static_cast<size_t>(m) + 1, one);
  for (int i = 1; i <= m; ++i) {
    const S& ai = a[static_cast<size_t>(i)];
    const S& ap = a[static_cast<size_t>(i) - 1];
    if (convention == BetaConvention::printed) {
      sys.beta[static_cast<size_t>(i)] = ai / a[0];
      sys.alpha[static_cast<size_t>(i)] = ai / ap;
    } else {
      sys.beta[static_cast<size_t>(i)] = a[0] / ai;
      sys.alpha[static_cast<size_t>(i)] = ap / ai;
    }
  }

  sys.X.assign(static_cast<size_t>(m) + 1, S(0));
  sys.Y.assign(static_cast<size_t>(m) + 2, S(0));
  for (int i = 1; i <= m; ++i) {
    sys.X[static_cast<size_t>(i)] =
        (sys.beta[static_cast<size_t>(i) - 1] - sys.beta[static_cast<size_t>(i)]) / two -
        ((one + sys.sigma[static_cast<size_t>(i)]) / two) * a[0];
  }
  for (int i = 1; i <= m + 1; ++i) {
    sys.Y[static_cast<size_t>(i)] =
        sys.beta[static_cast<size_t>(i) - 1] / two -
        (one + (n - S(i)) * (one - sys.sigma[static_cast<size_t>(i)])) * a[0];
  }
  return sys;
}

// gamma_0..gamma_m at fixed n.  Requires 0 <= m <= n-2.
std::vector<Rational> gamma_weights(int n, int m);

// p_0..p_m at fixed n.  Requires 0 <= m <= n-2.
std::vector<Rational> lebesgue_exponents(int n, int m);

// (beta_0..beta_m, alpha_0..alpha_m) from an exponent sequence p_0..p_m with
// every p_i > 2; alpha[0] = beta[0] = 1.
std::pair<std::vector<Rational>, std::vector<Rational>> beta_ratios(
    const std::vector<Rational>& p, BetaConvention convention);

// Residuals stripped of the placeholder slots: first = (X_1..X_m),
// second = (Y_1..Y_{m+1}).
std::pair<std::vector<Rational>, std::vector<Rational>> identity_residuals(
    const MultigrainParams& params);

struct VerifyReport {
  int n = 0;
  int m = 0;
  BetaConvention convention = BetaConvention::reciprocal;  // the verified one
  std::vector<std::string> gamma, p, beta;  // exact fraction strings
  std::vector<std::string> X, Y;            // residuals under `convention`
  std::vector<std::string> X_printed, Y_printed;
  bool all_zero = false;
  bool printed_all_zero = false;
  bool p0_closed_form_match = false;  // p_0 == p_broad(n, n-m).p
  bool gamma_invariants = false;      // sum exactly 1 and each gamma_j in [0, 1]
  std::string note;
};

// Builds both conventions at fixed (n, m) and checks every identity.
// Requires 3 <= n and 0 <= m <= n-2.
VerifyReport verify_identities(int n, int m);

struct SymbolicReport {
  int m = 0;
  BetaConvention convention = BetaConvention::reciprocal;
  std::vector<std::string> gamma, p, beta, X, Y;  // rational functions of n
  std::string p0;
  bool all_zero = false;              // residuals identically zero in n
  bool printed_all_zero = false;
  bool p0_closed_form_match = false;  // as rational functions
  bool gamma_sum_is_one = false;
  int degree_cap = 0;
  std::string note;
};

// Verifies the residuals as rational functions of the indeterminate n at
// fixed m, so the identities hold for every admissible dimension at once.
// Degrees are checked against `degree_cap` (ResourceError beyond it).
SymbolicReport verify_identities_symbolic(int m, int degree_cap = 512);

std::string verify_report_json(const VerifyReport& report);
std::string symbolic_report_json(const SymbolicReport& report);

}  // namespace broadexp
