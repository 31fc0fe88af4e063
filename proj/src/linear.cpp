#include "broadexp/linear.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace broadexp {

Rational p_limit(int n, int k) {
  if (!(2 <= k && k <= n))
    throw std::domain_error("p_limit: need 2 <= k <= n");
  return Rational(2) + Rational(4, 2L * n - k);
}

std::optional<Rational> p_upper_bg(int n, int k) {
  if (!(2 <= k && k <= n))
    throw std::domain_error("p_upper_bg: need 2 <= k <= n");
  if (k == 2) return std::nullopt;
  return Rational(2) + Rational(2, k - 2);
}

// Full sweep over k with the product maintained incrementally as an
// unreduced integer pair (stepping k -> k-1 multiplies by 2k/(2k+1)).
static LinearResult linear_exponent_sweep(int n) {
  mpz_class num = 1, den = 1;
  Rational best_p;
  int best_k = 0;
  bool tie = false;
  for (int k = n; k >= 2; --k) {
    if (k < n) {
      num *= 2 * k;
      den *= 2 * k + 1;
    }
    // p_broad = 2 + 6/(2(n-1) + (k-1) num/den), assembled over a common
    // denominator to stay in integers.
    Rational pb = Rational(2) + Rational(6 * den, 2 * (n - 1) * den + (k - 1) * num);
    Rational pl = p_limit(n, k);
    Rational val = std::max(pb, pl);
    if (best_k == 0 || val < best_p) {
      best_p = val;
      best_k = k;
      tie = false;
    } else if (val == best_p) {
      best_k = k;  // prefer the smaller k among ties
      tie = true;
    }
  }
  LinearResult res;
  res.n = n;
  res.k_opt = best_k;
  res.p = best_p;
  res.tie = tie;
  return res;
}

// Bracket search for the crossing point k* = min{k : p_broad <= p_limit}.
// p_broad strictly decreases in k and p_limit strictly increases, so the
// minimum of their max sits at k*-1 or k*.
static LinearResult linear_exponent_bracketed(int n) {
  auto crosses = [n](int k) {
    // p_broad(k) <= p_limit(k)  <=>  6(2n-k) den <= 8(n-1) den + 4(k-1) num
    auto [num, den] = detail::dyadic_product_parts(k, n);
    mpz_class lhs = mpz_class(6) * (2L * n - k) * den;
    mpz_class rhs = mpz_class(8) * (n - 1) * den + mpz_class(4) * (k - 1) * num;
    return lhs <= rhs;
  };
  int lo = 2, hi = n;  // invariant: !crosses(lo), crosses(hi)
  while (hi - lo > 1) {
    int mid = lo + (hi - lo) / 2;
    (crosses(mid) ? hi : lo) = mid;
  }
  Rational left = p_broad(n, hi - 1).p;  // max(...) = p_broad below the crossing
  Rational right = p_limit(n, hi);       // max(...) = p_limit from k* on
  LinearResult res;
  res.n = n;
  if (left <= right) {
    res.k_opt = hi - 1;
    res.p = left;
    res.tie = (left == right);
  } else {
    res.k_opt = hi;
    res.p = right;
  }
  return res;
}

LinearResult linear_exponent(int n) {
  if (n < 3) throw std::domain_error("linear_exponent: need n >= 3");
  LinearResult res = n <= 512 ? linear_exponent_sweep(n)
                              : linear_exponent_bracketed(n);
  res.p_broad_at_k = p_broad(n, res.k_opt).p;
  res.p_limit_at_k = p_limit(n, res.k_opt);
  auto upper = p_upper_bg(n, res.k_opt);
  res.upper_ok = !upper || res.p <= *upper;
  return res;
}

PriorRegistry PriorRegistry::defaults() {
  PriorRegistry reg;
  reg.add({2, Rational(4), "Fefferman-Stein 1970"});
  reg.add({3, Rational(3) + Rational(3, 13), "Wang 2022"});
  reg.add({4, Rational(2) + Rational(1407, 1759), "Hickman-Rogers 2019"});
  reg.add({6, Rational(2) + Rational(1, 2), "Guth 2018"});
  reg.add({8, Rational(2) + Rational(4, 11), "Guth 2018"});
  reg.add({10, Rational(2) + Rational(2, 7), "Guth 2018"});
  reg.add({12, Rational(2) + Rational(4, 17), "Guth 2018"});
  return reg;
}

void PriorRegistry::add(PriorEntry entry) {
  entries_.push_back(std::move(entry));
}

const PriorEntry* PriorRegistry::find(int n) const {
  for (const auto& e : entries_)
    if (e.n == n) return &e;
  return nullptr;
}

std::vector<TableRow> state_of_art_table(int n_min, int n_max,
                                         const PriorRegistry& registry) {
  if (!(3 <= n_min && n_min <= n_max))
    throw std::domain_error("state_of_art_table: need 3 <= n_min <= n_max");
  std::vector<TableRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    LinearResult lin = linear_exponent(n);
    TableRow row;
    row.n = n;
    row.new_p = lin.p;
    row.k_opt = lin.k_opt;
    row.upper_ok = lin.upper_ok;
    if (const PriorEntry* prior = registry.find(n)) {
      row.prior = *prior;
      row.winner = lin.p < prior->p ? "new" : "prior";
    } else {
      row.winner = "new";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string table_text(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "  n  k_opt  p (this work)            prior                    winner\n";
  for (const auto& row : rows) {
    std::string ours = row.new_p.mixed_str();
    std::string prior = row.prior
        ? row.prior->p.mixed_str() + " (" + row.prior->attribution + ")"
        : "-";
    out << "  " << row.n << "  " << row.k_opt << "  " << ours;
    for (size_t i = ours.size(); i < 23; ++i) out << ' ';
    out << "  " << prior;
    for (size_t i = prior.size(); i < 23; ++i) out << ' ';
    out << "  " << row.winner << "\n";
  }
  return out.str();
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "n,new_num,new_den,prior_num,prior_den,winner,k_opt,upper_ok\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.new_p.num() << ',' << row.new_p.den() << ',';
    if (row.prior)
      out << row.prior->p.num() << ',' << row.prior->p.den();
    else
      out << ',';
    out << ',' << row.winner << ',' << row.k_opt << ','
        << (row.upper_ok ? 1 : 0) << "\n";
  }
  return out.str();
}

std::string table_json(const std::vector<TableRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json obj{
        {"n", row.n},
        {"new_num", row.new_p.num().get_str()},
        {"new_den", row.new_p.den().get_str()},
        {"winner", row.winner},
        {"k_opt", row.k_opt},
        {"upper_ok", row.upper_ok},
    };
    if (row.prior) {
      obj["prior_num"] = row.prior->p.num().get_str();
      obj["prior_den"] = row.prior->p.den().get_str();
      obj["attribution"] = row.prior->attribution;
    } else {
      obj["prior_num"] = nullptr;
      obj["prior_den"] = nullptr;
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

}  // namespace broadexp
