#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "broadexp/asymptotic.hpp"
#include "broadexp/broad.hpp"
#include "broadexp/interval.hpp"
#include "broadexp/linear.hpp"
#include "broadexp/params.hpp"
#include "broadexp/wolff.hpp"

namespace py = pybind11;
using namespace broadexp;

namespace {

std::vector<std::string> str_list(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.str());
  return out;
}

py::dict interval_dict(const Interval& iv) {
  py::dict d;
  d["lo"] = iv.lo().str();
  d["hi"] = iv.hi().str();
  d["lo_float"] = iv.lo().to_double();
  d["hi_float"] = iv.hi().to_double();
  return d;
}

BetaConvention convention_of(const std::string& name) {
  if (name == "printed") return BetaConvention::printed;
  if (name == "reciprocal") return BetaConvention::reciprocal;
  throw std::domain_error("convention must be 'printed' or 'reciprocal'");
}

py::dict broad_dict(const BroadExponent& rec) {
  py::dict d;
  d["n"] = rec.n;
  d["k"] = rec.k;
  d["p"] = rec.p.str();
  d["p_float"] = rec.p.to_double();
  d["product"] = rec.product.str();
  d["lower_ok"] = rec.lower_ok;
  d["upper_ok"] = rec.upper_ok;
  d["k_at_boundary"] = rec.k_at_boundary;
  return d;
}

py::dict linear_dict(const LinearResult& res) {
  py::dict d;
  d["n"] = res.n;
  d["k_opt"] = res.k_opt;
  d["p"] = res.p.str();
  d["p_float"] = res.p.to_double();
  d["p_broad_at_k"] = res.p_broad_at_k.str();
  d["p_limit_at_k"] = res.p_limit_at_k.str();
  d["upper_ok"] = res.upper_ok;
  d["tie"] = res.tie;
  return d;
}

py::dict report_dict(const TrialReport& rep) {
  py::dict d;
  d["seed"] = rep.seed;
  d["n"] = rep.n;
  d["m"] = rep.m;
  d["R"] = rep.R;
  d["r"] = rep.r;
  d["rho"] = rep.rho;
  d["line_count"] = rep.line_count;
  d["count"] = rep.count;
  d["bound"] = rep.bound;
  d["ratio"] = rep.ratio;
  d["violated"] = rep.violated;
  d["model"] = rep.model;
  d["generator"] = rep.generator;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() =
      "Exact-arithmetic toolkit for k-broad restriction exponents: the "
      "optimized exponent table, multigrain identity verification, certified "
      "root enclosures, and the nested line-incidence lab.";

  // --- broad exponents -----------------------------------------------------
  mod.def(
      "dyadic_product",
      [](int k, int n) { return dyadic_product(k, n).str(); }, py::arg("k"),
      py::arg("n"), "prod_{i=k}^{n-1} 2i/(2i+1) as an exact fraction string");
  mod.def(
      "p_broad", [](int n, int k) { return broad_dict(p_broad(n, k)); },
      py::arg("n"), py::arg("k"),
      "k-broad exponent record with its bound certificate");
  mod.def("chain_inequality_check", &chain_inequality_check, py::arg("i"));
  mod.def(
      "appendix_product_bounds",
      [](int n, int k) { return appendix_product_bounds(n, k); }, py::arg("n"),
      py::arg("k"), "(lower_ok, upper_ok) for the squared-product bounds");

  // --- linear optimizer ----------------------------------------------------
  mod.def(
      "p_limit", [](int n, int k) { return p_limit(n, k).str(); },
      py::arg("n"), py::arg("k"));
  mod.def(
      "p_upper_bg",
      [](int n, int k) -> std::optional<std::string> {
        auto v = p_upper_bg(n, k);
        if (!v) return std::nullopt;
        return v->str();
      },
      py::arg("n"), py::arg("k"), "2 + 2/(k-2), or None when k = 2");
  mod.def(
      "linear_exponent",
      [](int n) { return linear_dict(linear_exponent(n)); }, py::arg("n"));
  mod.def(
      "state_of_art_table",
      [](int n_min, int n_max) {
        py::list rows;
        for (const auto& row :
             state_of_art_table(n_min, n_max, PriorRegistry::defaults())) {
          py::dict d;
          d["n"] = row.n;
          d["new_p"] = row.new_p.str();
          d["k_opt"] = row.k_opt;
          d["upper_ok"] = row.upper_ok;
          d["winner"] = row.winner;
          if (row.prior) {
            py::dict prior;
            prior["p"] = row.prior->p.str();
            prior["attribution"] = row.prior->attribution;
            d["prior"] = prior;
          } else {
            d["prior"] = py::none();
          }
          rows.append(d);
        }
        return rows;
      },
      py::arg("n_min"), py::arg("n_max"),
      "one row per dimension against the published record");

  // --- multigrain parameters ----------------------------------------------
  mod.def(
      "gamma_weights",
      [](int n, int m) { return str_list(gamma_weights(n, m)); }, py::arg("n"),
      py::arg("m"));
  mod.def(
      "lebesgue_exponents",
      [](int n, int m) { return str_list(lebesgue_exponents(n, m)); },
      py::arg("n"), py::arg("m"));
  mod.def(
      "beta_ratios",
      [](const std::vector<std::string>& p, const std::string& convention) {
        std::vector<Rational> exps;
        exps.reserve(p.size());
        for (const auto& s : p) exps.push_back(Rational::from_string(s));
        auto [beta, alpha] = beta_ratios(exps, convention_of(convention));
        return std::make_pair(str_list(beta), str_list(alpha));
      },
      py::arg("p"), py::arg("convention") = "reciprocal",
      "(beta, alpha) ratio lists from fraction-string exponents");
  mod.def(
      "verify_identities",
      [](int n, int m) {
        VerifyReport rep = verify_identities(n, m);
        py::dict d;
        d["n"] = rep.n;
        d["m"] = rep.m;
        d["convention"] = to_string(rep.convention);
        d["gamma"] = rep.gamma;
        d["p"] = rep.p;
        d["beta"] = rep.beta;
        d["X"] = rep.X;
        d["Y"] = rep.Y;
        d["X_printed"] = rep.X_printed;
        d["Y_printed"] = rep.Y_printed;
        d["all_zero"] = rep.all_zero;
        d["printed_all_zero"] = rep.printed_all_zero;
        d["p0_closed_form_match"] = rep.p0_closed_form_match;
        d["gamma_invariants"] = rep.gamma_invariants;
        d["note"] = rep.note;
        return d;
      },
      py::arg("n"), py::arg("m"));
  mod.def(
      "verify_identities_symbolic",
      [](int m, int degree_cap) {
        SymbolicReport rep = verify_identities_symbolic(m, degree_cap);
        py::dict d;
        d["m"] = rep.m;
        d["convention"] = to_string(rep.convention);
        d["gamma"] = rep.gamma;
        d["p"] = rep.p;
        d["beta"] = rep.beta;
        d["X"] = rep.X;
        d["Y"] = rep.Y;
        d["p0"] = rep.p0;
        d["all_zero"] = rep.all_zero;
        d["printed_all_zero"] = rep.printed_all_zero;
        d["p0_closed_form_match"] = rep.p0_closed_form_match;
        d["gamma_sum_is_one"] = rep.gamma_sum_is_one;
        d["degree_cap"] = rep.degree_cap;
        d["note"] = rep.note;
        return d;
      },
      py::arg("m"), py::arg("degree_cap") = 512);

  // --- certified enclosures ------------------------------------------------
  mod.def(
      "solve_cubic",
      [](int precision_bits) { return interval_dict(solve_cubic(precision_bits)); },
      py::arg("precision_bits") = 64,
      "enclosure of the real root of 2x^3 + 3x^2 - 2");
  mod.def(
      "cardano_root",
      [](int precision_bits) { return interval_dict(cardano_root(precision_bits)); },
      py::arg("precision_bits") = 64);
  mod.def(
      "nu_lambda",
      [](int precision_bits) {
        NuLambda nl = nu_lambda(precision_bits);
        py::dict d;
        d["nu"] = interval_dict(nl.nu);
        d["lambda"] = interval_dict(nl.lambda);
        return d;
      },
      py::arg("precision_bits") = 64);
  mod.def(
      "tomas_gap", [](long n) { return tomas_gap(n).str(); }, py::arg("n"));
  mod.def(
      "asymptotic_fit",
      [](long n_lo, long n_hi, int max_points, int precision_bits) {
        py::list out;
        for (const auto& pt :
             asymptotic_fit(n_lo, n_hi, max_points, precision_bits)) {
          py::dict d;
          d["n"] = pt.n;
          d["k_opt"] = pt.k_opt;
          d["gap"] = pt.gap.str();
          d["gap_float"] = pt.gap.to_double();
          d["deviation"] = pt.deviation;
          d["k_ratio"] = pt.k_ratio;
          out.append(d);
        }
        return out;
      },
      py::arg("n_lo"), py::arg("n_hi"), py::arg("max_points") = 64,
      py::arg("precision_bits") = 128);

  // --- wolff lab -----------------------------------------------------------
  mod.def("direction_lattice", &direction_lattice, py::arg("n"), py::arg("R"),
          "R^{-1/2}-separated unit directions from the frequency lattice");
  mod.def(
      "line_occupancy",
      [](const Eigen::VectorXd& base, const Eigen::VectorXd& dir,
         const Eigen::MatrixXd& conormals, const Eigen::VectorXd& offset,
         double rho, const Eigen::VectorXd& center, double radius) {
        return line_occupancy(Line(base, dir), AffineSubspace{conormals, offset},
                              rho, Ball{center, radius});
      },
      py::arg("base"), py::arg("dir"), py::arg("conormals"), py::arg("offset"),
      py::arg("rho"), py::arg("center"), py::arg("radius"),
      "exact length of the chord inside the rho-slab around the subspace");
  mod.def(
      "line_occupancy_mc",
      [](const Eigen::VectorXd& base, const Eigen::VectorXd& dir,
         const Eigen::MatrixXd& conormals, const Eigen::VectorXd& offset,
         double rho, const Eigen::VectorXd& center, double radius, int samples,
         std::uint64_t seed) {
        return line_occupancy_mc(Line(base, dir),
                                 AffineSubspace{conormals, offset}, rho,
                                 Ball{center, radius}, samples, seed);
      },
      py::arg("base"), py::arg("dir"), py::arg("conormals"), py::arg("offset"),
      py::arg("rho"), py::arg("center"), py::arg("radius"),
      py::arg("samples") = 100000, py::arg("seed") = 0);
  mod.def("theorem_bound", &theorem_bound, py::arg("n"), py::arg("m"),
          py::arg("R"), py::arg("r"), py::arg("rho"), py::arg("eps") = 0.0,
          py::arg("C") = 1.0);
  mod.def(
      "falsification_trial",
      [](std::uint64_t seed, int n, int m, double R, std::vector<double> r,
         std::vector<double> rho, double C, double eps, long budget,
         const std::string& flag_distribution) {
        TrialConfig cfg;
        cfg.n = n;
        cfg.m = m;
        cfg.R = R;
        cfg.r = std::move(r);
        cfg.rho = std::move(rho);
        cfg.C = C;
        cfg.eps = eps;
        cfg.budget = budget;
        cfg.flag_distribution = flag_distribution;
        return report_dict(falsification_trial(seed, cfg));
      },
      py::arg("seed"), py::arg("n") = 3, py::arg("m") = 1, py::arg("R") = 1e4,
      py::arg("r") = std::vector<double>{}, py::arg("rho") = std::vector<double>{},
      py::arg("C") = 10.0, py::arg("eps") = 0.1, py::arg("budget") = 20000,
      py::arg("flag_distribution") = "uniform",
      "one seeded incidence experiment; count vs the conjectured bound");
  mod.def(
      "extremal_summary",
      [](int n, int j, double R) {
        auto family = extremal_family(n, j, R);
        AffineFlag flag = extremal_flag(n, j, R);
        long count = count_satisfying(family, flag);
        std::vector<double> rs(static_cast<size_t>(j), R);
        std::vector<double> rhos(static_cast<size_t>(j), std::sqrt(R));
        double bound = theorem_bound(n, j, R, rs, rhos, 0.0, 1.0);
        py::dict d;
        d["family_size"] = family.size();
        d["count"] = count;
        d["bound"] = bound;
        d["ratio"] = static_cast<double>(count) / bound;
        return d;
      },
      py::arg("n"), py::arg("j"), py::arg("R"),
      "near-extremal witness family vs the C = 1, eps = 0 bound");
}
