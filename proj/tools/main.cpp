#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "broadexp/asymptotic.hpp"
#include "broadexp/broad.hpp"
#include "broadexp/linear.hpp"
#include "broadexp/params.hpp"
#include "broadexp/wolff.hpp"
#include "json.hpp"

namespace {

using namespace broadexp;

// Everything funnels through one sink so --output behaves identically for
// every subcommand.  Wolff reports append, matching the JSON-lines contract.
void emit(const std::string& text, const std::string& path, bool append = false) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << text;
}

int decimal_digits(int precision_bits) {
  int digits = static_cast<int>(precision_bits * 0.30103) + 1;
  return std::min(45, std::max(8, digits));
}

int run_broad(int n, int k, const std::string& format, const std::string& out) {
  BroadExponent rec = p_broad(n, k);
  std::ostringstream text;
  if (format == "json") {
    nlohmann::json obj{
        {"n", rec.n},
        {"k", rec.k},
        {"p", rec.p.str()},
        {"p_num", rec.p.num().get_str()},
        {"p_den", rec.p.den().get_str()},
        {"product", rec.product.str()},
        {"lower_ok", rec.lower_ok},
        {"upper_ok", rec.upper_ok},
        {"k_at_boundary", rec.k_at_boundary},
    };
    text << obj.dump(2) << "\n";
  } else if (format == "csv") {
    text << "n,k,p_num,p_den,product_num,product_den,lower_ok,upper_ok\n"
         << rec.n << ',' << rec.k << ',' << rec.p.num() << ',' << rec.p.den()
         << ',' << rec.product.num() << ',' << rec.product.den() << ','
         << (rec.lower_ok ? 1 : 0) << ',' << (rec.upper_ok ? 1 : 0) << "\n";
  } else {
    text << "p = " << rec.p.mixed_str() << "\n"
         << "product = " << rec.product.str() << "\n"
         << "bounds certificate: lower "
         << (rec.lower_ok ? "ok" : "VIOLATED") << ", upper "
         << (rec.upper_ok ? "ok" : "VIOLATED")
         << (rec.k_at_boundary ? " (vacuous at k = n)" : "") << "\n";
  }
  emit(text.str(), out);
  return rec.lower_ok && rec.upper_ok ? 0 : 2;
}

int run_linear(int n, const std::string& format, const std::string& out) {
  LinearResult res = linear_exponent(n);
  std::ostringstream text;
  if (format == "json") {
    nlohmann::json obj{
        {"n", res.n},
        {"p", res.p.str()},
        {"p_num", res.p.num().get_str()},
        {"p_den", res.p.den().get_str()},
        {"k_opt", res.k_opt},
        {"p_broad_at_k", res.p_broad_at_k.str()},
        {"p_limit_at_k", res.p_limit_at_k.str()},
        {"upper_ok", res.upper_ok},
        {"tie", res.tie},
    };
    text << obj.dump(2) << "\n";
  } else if (format == "csv") {
    text << "n,p_num,p_den,k_opt,upper_ok,tie\n"
         << res.n << ',' << res.p.num() << ',' << res.p.den() << ','
         << res.k_opt << ',' << (res.upper_ok ? 1 : 0) << ','
         << (res.tie ? 1 : 0) << "\n";
  } else {
    text << "p = " << res.p.mixed_str() << "\n"
         << "k_opt = " << res.k_opt << (res.tie ? " (tied)" : "") << "\n"
         << "p_broad(k_opt) = " << res.p_broad_at_k.str()
         << ", p_limit(k_opt) = " << res.p_limit_at_k.str() << "\n"
         << "upper constraint: " << (res.upper_ok ? "ok" : "VIOLATED") << "\n";
  }
  emit(text.str(), out);
  return res.upper_ok ? 0 : 2;
}

int run_table(int n_min, int n_max, const std::string& format,
              const std::string& out) {
  auto rows = state_of_art_table(n_min, n_max, PriorRegistry::defaults());
  if (format == "json")
    emit(table_json(rows), out);
  else if (format == "csv")
    emit(table_csv(rows), out);
  else
    emit(table_text(rows), out);
  return 0;
}

int run_verify(bool symbolic, int a, int b, bool has_b,
               const std::string& format, const std::string& out) {
  if (symbolic) {
    if (has_b)
      throw std::domain_error("verify-params --symbolic takes a single m");
    SymbolicReport rep = verify_identities_symbolic(a);
    std::ostringstream text;
    if (format == "json") {
      text << symbolic_report_json(rep);
    } else if (format == "csv") {
      text << "key,value\n"
           << "m," << rep.m << "\n"
           << "convention," << to_string(rep.convention) << "\n"
           << "all_zero," << (rep.all_zero ? 1 : 0) << "\n"
           << "printed_all_zero," << (rep.printed_all_zero ? 1 : 0) << "\n"
           << "p0_closed_form_match," << (rep.p0_closed_form_match ? 1 : 0) << "\n"
           << "gamma_sum_is_one," << (rep.gamma_sum_is_one ? 1 : 0) << "\n"
           << "p0," << rep.p0 << "\n";
    } else {
      text << "symbolic verification at m = " << rep.m << " (indeterminate n)\n"
           << "convention = " << to_string(rep.convention) << "\n"
           << "p_0 = " << rep.p0 << "\n"
           << "all residuals identically zero: " << (rep.all_zero ? "yes" : "NO")
           << "\n"
           << "p_0 closed form match: " << (rep.p0_closed_form_match ? "yes" : "NO")
           << "\n"
           << "gamma sum = 1: " << (rep.gamma_sum_is_one ? "yes" : "NO") << "\n"
           << "note: " << rep.note << "\n";
    }
    emit(text.str(), out);
    return rep.all_zero && rep.p0_closed_form_match && rep.gamma_sum_is_one ? 0 : 2;
  }
  if (!has_b) throw std::domain_error("verify-params needs n and m");
  VerifyReport rep = verify_identities(a, b);
  std::ostringstream text;
  if (format == "json") {
    text << verify_report_json(rep);
  } else if (format == "csv") {
    text << "key,value\n"
         << "n," << rep.n << "\n"
         << "m," << rep.m << "\n"
         << "convention," << to_string(rep.convention) << "\n"
         << "all_zero," << (rep.all_zero ? 1 : 0) << "\n"
         << "printed_all_zero," << (rep.printed_all_zero ? 1 : 0) << "\n"
         << "p0_closed_form_match," << (rep.p0_closed_form_match ? 1 : 0) << "\n"
         << "gamma_invariants," << (rep.gamma_invariants ? 1 : 0) << "\n";
  } else {
    text << "verification at n = " << rep.n << ", m = " << rep.m << "\n"
         << "convention = " << to_string(rep.convention) << "\n";
    text << "gamma =";
    for (const auto& g : rep.gamma) text << ' ' << g;
    text << "\np     =";
    for (const auto& p : rep.p) text << ' ' << p;
    text << "\nbeta  =";
    for (const auto& bta : rep.beta) text << ' ' << bta;
    text << "\nall residuals zero: " << (rep.all_zero ? "yes" : "NO") << "\n"
         << "printed convention zero: " << (rep.printed_all_zero ? "yes" : "no")
         << "\n"
         << "p_0 closed form match: " << (rep.p0_closed_form_match ? "yes" : "NO")
         << "\n"
         << "gamma invariants: " << (rep.gamma_invariants ? "yes" : "NO") << "\n";
  }
  emit(text.str(), out);
  return rep.all_zero && rep.p0_closed_form_match && rep.gamma_invariants ? 0 : 2;
}

int run_asymptotic(long n_min, long n_max, int points, int precision_bits,
                   const std::string& format, const std::string& out) {
  auto fit = asymptotic_fit(n_min, n_max, points, precision_bits);
  NuLambda nl = nu_lambda(precision_bits);
  int digits = decimal_digits(precision_bits);
  std::ostringstream text;
  if (format == "csv") {
    text << asymptotic_csv(fit);
  } else if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& pt : fit) {
      arr.push_back({
          {"n", pt.n},
          {"k_opt", pt.k_opt},
          {"gap_num", pt.gap.num().get_str()},
          {"gap_den", pt.gap.den().get_str()},
          {"deviation", pt.deviation},
          {"k_ratio", pt.k_ratio},
      });
    }
    nlohmann::json obj{
        {"precision_bits", precision_bits},
        {"lambda_lo", decimal_str(nl.lambda.lo(), digits, -1)},
        {"lambda_hi", decimal_str(nl.lambda.hi(), digits, +1)},
        {"nu_lo", decimal_str(nl.nu.lo(), digits, -1)},
        {"nu_hi", decimal_str(nl.nu.hi(), digits, +1)},
        {"points", arr},
    };
    text << obj.dump(2) << "\n";
  } else {
    text << "lambda = " << nl.lambda.str(digits) << "  (precision "
         << precision_bits << " bits)\n"
         << "nu     = " << nl.nu.str(digits) << "\n";
    for (const auto& e : lambda_registry())
      text << "  registry: " << e.label << " -> " << e.lambda << "\n";
    text << "\n  n      k_opt   gap (= n(p-2))          |gap - lambda| <=\n";
    for (const auto& pt : fit) {
      std::string gap = decimal_str(
          Rational(pt.gap.num(), pt.gap.den()), 12, 0);
      text << "  " << pt.n << "  " << pt.k_opt << "  " << gap << "  "
           << pt.deviation << "\n";
    }
    text << "\ncontrol: tomas gap 4n/(n-1) at n_max = "
         << tomas_gap(n_max).str() << " (limit 4, not lambda)\n";
  }
  emit(text.str(), out);
  return 0;
}

int run_cubic(int precision_bits, const std::string& format,
              const std::string& out) {
  Interval root = solve_cubic(precision_bits);
  Interval cardano = cardano_root(precision_bits);
  NuLambda nl = nu_lambda(precision_bits);
  int digits = decimal_digits(precision_bits);
  std::ostringstream text;
  if (format == "json") {
    auto pack = [digits](const Interval& iv) {
      return nlohmann::json{
          {"lo", iv.lo().str()},
          {"hi", iv.hi().str()},
          {"lo_decimal", decimal_str(iv.lo(), digits, -1)},
          {"hi_decimal", decimal_str(iv.hi(), digits, +1)},
      };
    };
    nlohmann::json obj{
        {"precision_bits", precision_bits},
        {"root", pack(root)},
        {"cardano", pack(cardano)},
        {"nu", pack(nl.nu)},
        {"lambda", pack(nl.lambda)},
        {"intervals_intersect", root.intersects(cardano)},
    };
    text << obj.dump(2) << "\n";
  } else if (format == "csv") {
    auto row = [&text, digits](const char* name, const Interval& iv) {
      text << name << ',' << decimal_str(iv.lo(), digits, -1) << ','
           << decimal_str(iv.hi(), digits, +1) << "\n";
    };
    text << "name,lo,hi\n";
    row("root", root);
    row("cardano", cardano);
    row("nu", nl.nu);
    row("lambda", nl.lambda);
  } else {
    text << "2x^3 + 3x^2 - 2 = 0, unique real root (precision "
         << precision_bits << " bits)\n"
         << "bisection: " << root.str(digits) << "\n"
         << "cardano:   " << cardano.str(digits) << "\n"
         << "intervals intersect: " << (root.intersects(cardano) ? "yes" : "NO")
         << "\n"
         << "nu     = " << nl.nu.str(digits) << "\n"
         << "lambda = " << nl.lambda.str(digits) << "\n";
  }
  emit(text.str(), out);
  return root.intersects(cardano) ? 0 : 2;
}

int run_wolff(const std::string& config_path, const std::string& format,
              const std::string& out) {
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot read config '" + config_path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  TrialSuite suite = trial_suite_from_json(buffer.str());

  long violations = 0;
  std::ostringstream text;
  if (format == "csv")
    text << "seed,n,m,R,line_count,count,bound,ratio,violated\n";
  for (std::uint64_t seed : suite.seeds) {
    TrialReport rep = falsification_trial(seed, suite.config);
    if (rep.violated) ++violations;
    if (format == "csv") {
      text << rep.seed << ',' << rep.n << ',' << rep.m << ',' << rep.R << ','
           << rep.line_count << ',' << rep.count << ',' << rep.bound << ','
           << rep.ratio << ',' << (rep.violated ? 1 : 0) << "\n";
    } else if (format == "text") {
      text << "seed " << rep.seed << ": count " << rep.count << " / bound "
           << rep.bound << " (ratio " << rep.ratio << ") -> "
           << (rep.violated ? "VIOLATED" : "ok") << "\n";
    } else {
      text << trial_report_jsonline(rep);
    }
  }
  if (format == "text")
    text << "violations: " << violations << "/" << suite.seeds.size() << "\n";
  emit(text.str(), out, /*append=*/true);
  return violations > 0 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"broadexp: exact arithmetic for k-broad restriction exponents"};
  app.require_subcommand(1);

  std::string format = "text", output;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--output", output, "write to file instead of stdout");
  };

  int broad_n = 0, broad_k = 0;
  CLI::App* broad = app.add_subcommand("broad", "k-broad exponent p_n(k)");
  broad->add_option("n", broad_n, "dimension")->required();
  broad->add_option("k", broad_k, "transversality degree")->required();
  add_common(broad);

  int linear_n = 0;
  CLI::App* linear = app.add_subcommand("linear", "optimized linear exponent");
  linear->add_option("n", linear_n, "dimension")->required();
  add_common(linear);

  int table_min = 0, table_max = 0;
  CLI::App* table = app.add_subcommand("table", "state-of-the-art table");
  table->add_option("n_min", table_min)->required();
  table->add_option("n_max", table_max)->required();
  add_common(table);

  int verify_a = 0, verify_b = 0;
  bool symbolic = false;
  CLI::App* verify =
      app.add_subcommand("verify-params", "multigrain identity verification");
  verify->add_flag("--symbolic", symbolic, "verify in an indeterminate n");
  CLI::Option* opt_a = verify->add_option("n", verify_a, "dimension (or m with --symbolic)");
  opt_a->required();
  CLI::Option* opt_b = verify->add_option("m", verify_b, "codimension depth");
  add_common(verify);

  long asy_min = 10, asy_max = 10000;
  int asy_points = 16, asy_bits = 96;
  CLI::App* asymptotic = app.add_subcommand("asymptotic", "lambda convergence fit");
  asymptotic->add_option("--n-max", asy_max, "largest dimension");
  asymptotic->add_option("--n-min", asy_min, "smallest dimension");
  asymptotic->add_option("--points", asy_points, "grid size");
  asymptotic->add_option("--precision", asy_bits, "lambda precision in bits");
  add_common(asymptotic);

  int cubic_bits = 64;
  CLI::App* cubic = app.add_subcommand("cubic", "root and lambda enclosures");
  cubic->add_option("--precision", cubic_bits, "enclosure width 2^-precision");
  add_common(cubic);

  std::string wolff_config;
  CLI::App* wolff = app.add_subcommand("wolff", "nested incidence trials");
  wolff->add_option("--config", wolff_config, "JSON trial configuration")
      ->required();
  add_common(wolff);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (broad->parsed()) return run_broad(broad_n, broad_k, format, output);
    if (linear->parsed()) return run_linear(linear_n, format, output);
    if (table->parsed()) return run_table(table_min, table_max, format, output);
    if (verify->parsed())
      return run_verify(symbolic, verify_a, verify_b,
                        opt_b->count() > 0, format, output);
    if (asymptotic->parsed())
      return run_asymptotic(asy_min, asy_max, asy_points, asy_bits, format,
                            output);
    if (cubic->parsed()) return run_cubic(cubic_bits, format, output);
    if (wolff->parsed()) return run_wolff(wolff_config, format, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
