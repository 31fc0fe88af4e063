#pragma once

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "broadexp/rational.hpp"

namespace broadexp {

// Dense univariate polynomial over Q.  coeffs_[i] multiplies x^i, the vector
// carries no trailing zeros, and the zero polynomial is the empty vector
// (degree() == -1 by convention).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
  }
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }
  // Ascending-order integer coefficients: from_ints({1, 0, 2}) = 2x^2 + 1.
  static Polynomial from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return Polynomial(std::move(v));
  }
  static Polynomial variable() {
    return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Rational coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(i)];
  }
  const Rational& leading() const {
    if (is_zero()) throw std::domain_error("Polynomial: leading of zero");
    return coeffs_.back();
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i)
      v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
  }
  Polynomial operator*(const Rational& s) const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = c * s;
    r.trim();
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                  const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("Polynomial: division by zero");
    Polynomial q, r = a;
    std::vector<Rational> qc(
        r.degree() >= b.degree() ? static_cast<size_t>(r.degree() - b.degree()) + 1 : 0,
        Rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int shift = r.degree() - b.degree();
      Rational factor = r.leading() / b.leading();
      qc[static_cast<size_t>(shift)] = factor;
      // r -= factor * x^shift * b, done in place
      std::vector<Rational> sub(static_cast<size_t>(shift) + b.coeffs_.size(),
                                Rational(0));
      for (size_t i = 0; i < b.coeffs_.size(); ++i)
        sub[static_cast<size_t>(shift) + i] = b.coeffs_[i] * factor;
      r = r - Polynomial(std::move(sub));
    }
    return {Polynomial(std::move(qc)), r};
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
  }

  // Monic gcd via Euclid's algorithm; gcd(0, 0) = 0.
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  // Human-readable descending-power rendering, e.g. "2*n^2 - 2*n + 1".
  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      Rational c = coeff(i);
      if (c.is_zero()) continue;
      if (first) {
        if (c.sign() < 0) out << "-";
      } else {
        out << (c.sign() < 0 ? " - " : " + ");
      }
      Rational a = c.abs();
      bool unit = (a == Rational(1));
      if (i == 0 || !unit) out << a.str();
      if (i > 0) {
        if (!unit) out << "*";
        out << var;
        if (i > 1) out << "^" << i;
      }
      first = false;
    }
    return out.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

// Quotient of two polynomials, kept reduced (gcd divided out) with a monic
// denominator, so equal functions compare equal componentwise.  Evaluation
// at a pole throws std::domain_error naming the vanishing denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
  RationalFunction(long c) : num_(Rational(c)), den_(Rational(1)) {}
  RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero())
      throw std::domain_error("RationalFunction: zero denominator");
    reduce(std::move(num), std::move(den));
  }
  static RationalFunction variable() {
    return RationalFunction(Polynomial::variable(), Polynomial(Rational(1)));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // Largest degree appearing in the reduced representation.
  int complexity() const { return std::max(num_.degree(), den_.degree()); }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b) {
    if (b.is_zero())
      throw std::domain_error("RationalFunction: division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Rational eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero())
      throw std::domain_error("RationalFunction: pole at x = " + x.str() +
                              " (denominator " + den_.str() + " vanishes)");
    return num_.eval(x) / d;
  }

  std::string str(const std::string& var = "x") const {
    if (den_ == Polynomial(Rational(1))) return num_.str(var);
    // Display in primitive integer form: scale both parts by the lcm of the
    // coefficient denominators over the gcd of the cleared integers, so the
    // internally monic (1/2)/(n - 1/2) prints as 1/(2*n - 1).
    mpz_class lcm_den(1), gcd_num(0);
    auto scan_dens = [&lcm_den](const Polynomial& p) {
      for (int i = 0; i <= p.degree(); ++i) {
        mpz_class d = p.coeff(i).den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
      }
    };
    scan_dens(num_);
    scan_dens(den_);
    auto scan_nums = [&lcm_den, &gcd_num](const Polynomial& p) {
      for (int i = 0; i <= p.degree(); ++i) {
        mpz_class c = p.coeff(i).num() * (lcm_den / p.coeff(i).den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.get_mpz_t());
      }
    };
    scan_nums(num_);
    scan_nums(den_);
    if (gcd_num == 0) gcd_num = 1;
    Rational scale(lcm_den, gcd_num);
    std::string n = (num_ * scale).str(var), d = (den_ * scale).str(var);
    auto needs_parens = [](const std::string& s) {
      return s.find(' ') != std::string::npos || s.find('/') != std::string::npos;
    };
    if (needs_parens(n)) n = "(" + n + ")";
    if (needs_parens(d)) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  void reduce(Polynomial num, Polynomial den) {
    if (num.is_zero()) {
      num_ = Polynomial();
      den_ = Polynomial(Rational(1));
      return;
    }
    Polynomial g = gcd(num, den);
    num = divmod(num, g).first;
    den = divmod(den, g).first;
    Rational lead = den.leading();
    num_ = num * lead.inverse();
    den_ = den * lead.inverse();
  }

  Polynomial num_, den_;
};

}  // namespace broadexp
