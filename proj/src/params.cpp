#include "broadexp/params.hpp"

#include <algorithm>

#include "json.hpp"

namespace broadexp {

static void require_nm(int n, int m) {
  if (n < 3 || m < 0 || m > n - 2)
    throw std::domain_error("multigrain parameters: need n >= 3 and 0 <= m <= n-2");
}

std::vector<Rational> gamma_weights(int n, int m) {
  require_nm(n, m);
  return build_multigrain(Rational(n), m, BetaConvention::reciprocal).gamma;
}

std::vector<Rational> lebesgue_exponents(int n, int m) {
  require_nm(n, m);
  return build_multigrain(Rational(n), m, BetaConvention::reciprocal).p;
}

std::pair<std::vector<Rational>, std::vector<Rational>> beta_ratios(
    const std::vector<Rational>& p, BetaConvention convention) {
  if (p.empty()) throw std::domain_error("beta_ratios: empty exponent sequence");
  std::vector<Rational> a;
  a.reserve(p.size());
  for (const auto& pi : p) {
    if (!(pi > Rational(2)))
      throw std::domain_error("beta_ratios: need every p_i > 2, got " + pi.str());
    a.push_back(Rational(1, 2) - Rational(1) / pi);
  }
  std::vector<Rational> beta(p.size(), Rational(1)), alpha(p.size(), Rational(1));
  for (size_t i = 1; i < p.size(); ++i) {
    if (convention == BetaConvention::printed) {
      beta[i] = a[i] / a[0];
      alpha[i] = a[i] / a[i - 1];
    } else {
      beta[i] = a[0] / a[i];
      alpha[i] = a[i - 1] / a[i];
    }
  }
  return {std::move(beta), std::move(alpha)};
}

std::pair<std::vector<Rational>, std::vector<Rational>> identity_residuals(
    const MultigrainParams& params) {
  std::vector<Rational> X(params.X.begin() + 1, params.X.end());
  std::vector<Rational> Y(params.Y.begin() + 1, params.Y.end());
  return {std::move(X), std::move(Y)};
}

template <class S>
static bool all_zero_residuals(const MultigrainParamsT<S>& sys) {
  for (int i = 1; i <= sys.m; ++i)
    if (!sys.X[static_cast<size_t>(i)].is_zero()) return false;
  for (int i = 1; i <= sys.m + 1; ++i)
    if (!sys.Y[static_cast<size_t>(i)].is_zero()) return false;
  return true;
}

static std::vector<std::string> to_strings(const std::vector<Rational>& v,
                                           size_t skip = 0) {
  std::vector<std::string> out;
  for (size_t i = skip; i < v.size(); ++i) out.push_back(v[i].str());
  return out;
}

static std::vector<std::string> to_strings(const std::vector<RationalFunction>& v,
                                           size_t skip = 0) {
  std::vector<std::string> out;
  for (size_t i = skip; i < v.size(); ++i) out.push_back(v[i].str("n"));
  return out;
}

static const char* kDeltaNote =
    "identities verified exactly at the unperturbed exponents; the O(delta) "
    "exponent perturbation used to make the Y_i strict is out of scope";

VerifyReport verify_identities(int n, int m) {
  require_nm(n, m);
  auto recip = build_multigrain(Rational(n), m, BetaConvention::reciprocal);
  auto printed = build_multigrain(Rational(n), m, BetaConvention::printed);

  VerifyReport rep;
  rep.n = n;
  rep.m = m;
  rep.convention = BetaConvention::reciprocal;
  rep.gamma = to_strings(recip.gamma);
  rep.p = to_strings(recip.p);
  rep.beta = to_strings(recip.beta);
  rep.X = to_strings(recip.X, 1);
  rep.Y = to_strings(recip.Y, 1);
  rep.X_printed = to_strings(printed.X, 1);
  rep.Y_printed = to_strings(printed.Y, 1);
  rep.all_zero = all_zero_residuals(recip);
  rep.printed_all_zero = all_zero_residuals(printed);
  rep.p0_closed_form_match = (recip.p[0] == p_broad(n, n - m).p);

  Rational sum(0);
  bool in_range = true;
  for (const auto& g : recip.gamma) {
    sum += g;
    in_range = in_range && Rational(0) <= g && g <= Rational(1);
  }
  rep.gamma_invariants = (sum == Rational(1)) && in_range;
  rep.note = kDeltaNote;
  return rep;
}

SymbolicReport verify_identities_symbolic(int m, int degree_cap) {
  if (m < 0) throw std::domain_error("verify_identities_symbolic: need m >= 0");
  // Degrees grow linearly in m (about 2m+4), so reject up front anything the
  // cap cannot accommodate, then confirm on the built system.
  if (2 * m + 4 > degree_cap)
    throw ResourceError("verify_identities_symbolic: degree cap " +
                        std::to_string(degree_cap) + " too small for m = " +
                        std::to_string(m));
  RationalFunction n = RationalFunction::variable();
  auto recip = build_multigrain(n, m, BetaConvention::reciprocal);
  auto printed = build_multigrain(n, m, BetaConvention::printed);

  int max_degree = 0;
  auto scan = [&max_degree](const std::vector<RationalFunction>& v) {
    for (const auto& f : v) max_degree = std::max(max_degree, f.complexity());
  };
  for (const auto* sys : {&recip, &printed}) {
    scan(sys->gamma);
    scan(sys->p);
    scan(sys->beta);
    scan(sys->X);
    scan(sys->Y);
  }
  if (max_degree > degree_cap)
    throw ResourceError("verify_identities_symbolic: degree " +
                        std::to_string(max_degree) + " exceeds cap");

  SymbolicReport rep;
  rep.m = m;
  rep.convention = BetaConvention::reciprocal;
  rep.degree_cap = degree_cap;
  rep.gamma = to_strings(recip.gamma);
  rep.p = to_strings(recip.p);
  rep.beta = to_strings(recip.beta);
  rep.X = to_strings(recip.X, 1);
  rep.Y = to_strings(recip.Y, 1);
  rep.p0 = recip.p[0].str("n");
  rep.all_zero = all_zero_residuals(recip);
  rep.printed_all_zero = all_zero_residuals(printed);

  // Closed form p_0 = 2 + 6/(2(n-1) + (n-m-1) prod_{i=n-m}^{n-1} 2i/(2i+1)),
  // assembled symbolically: the product has exactly m factors.
  RationalFunction one(1), two(2), prod = one;
  for (int t = 0; t < m; ++t) {
    RationalFunction two_i = two * (n - RationalFunction(m) + RationalFunction(t));
    prod = prod * (two_i / (two_i + one));
  }
  RationalFunction closed =
      two + RationalFunction(6) /
                (two * (n - one) + (n - RationalFunction(m) - one) * prod);
  rep.p0_closed_form_match = (recip.p[0] == closed);

  RationalFunction sum(0);
  for (const auto& g : recip.gamma) sum = sum + g;
  rep.gamma_sum_is_one = (sum == one);

  rep.note = std::string(kDeltaNote) +
             "; symbolic identities specialize to every integer n >= m+2 "
             "(no denominator vanishes there)";
  return rep;
}

static nlohmann::json base_json(const std::vector<std::string>& v) {
  return nlohmann::json(v);
}

std::string verify_report_json(const VerifyReport& rep) {
  nlohmann::json obj{
      {"n", rep.n},
      {"m", rep.m},
      {"convention", to_string(rep.convention)},
      {"gamma", base_json(rep.gamma)},
      {"p", base_json(rep.p)},
      {"beta", base_json(rep.beta)},
      {"X", base_json(rep.X)},
      {"Y", base_json(rep.Y)},
      {"X_printed", base_json(rep.X_printed)},
      {"Y_printed", base_json(rep.Y_printed)},
      {"all_zero", rep.all_zero},
      {"printed_all_zero", rep.printed_all_zero},
      {"p0_closed_form_match", rep.p0_closed_form_match},
      {"gamma_invariants", rep.gamma_invariants},
      {"note", rep.note},
  };
  return obj.dump(2) + "\n";
}

std::string symbolic_report_json(const SymbolicReport& rep) {
  nlohmann::json obj{
      {"m", rep.m},
      {"convention", to_string(rep.convention)},
      {"gamma", base_json(rep.gamma)},
      {"p", base_json(rep.p)},
      {"beta", base_json(rep.beta)},
      {"X", base_json(rep.X)},
      {"Y", base_json(rep.Y)},
      {"p0", rep.p0},
      {"all_zero", rep.all_zero},
      {"printed_all_zero", rep.printed_all_zero},
      {"p0_closed_form_match", rep.p0_closed_form_match},
      {"gamma_sum_is_one", rep.gamma_sum_is_one},
      {"degree_cap", rep.degree_cap},
      {"note", rep.note},
  };
  return obj.dump(2) + "\n";
}

}  // namespace broadexp
