// Acceptance harness: one pass/fail line per criterion, nonzero exit if any
// criterion fails.  Each check is exact where the underlying claim is exact;
// timings are printed so the stated budgets stay visible.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "broadexp/asymptotic.hpp"
#include "broadexp/broad.hpp"
#include "broadexp/interval.hpp"
#include "broadexp/linear.hpp"
#include "broadexp/params.hpp"
#include "broadexp/wolff.hpp"

using namespace broadexp;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome criterion_figure2() {
    auto start = Clock::now();
    const std::map<int, Rational> expected = {
        {5, Rational(63, 100)},
        {7, Rational(429, 1018)},
        {9, Rational(7293, 23032)},
        {11, Rational(12597, 49670)},
        {13, Rational(185725, 878068)},
        {14, Rational(1671525, 8414731)},
        {15, Rational(2, 11)},
        {16, Rational(20036013, 116580449)},
        {17, Rational(4, 25)},
        {18, Rational(123751845, 817128103)},
        {19, Rational(1, 7)},
    };
    bool ok = true;
    for (const auto& [n, frac] : expected)
        ok = ok && (linear_exponent(n).p == Rational(2) + frac);
    double elapsed = seconds_since(start);
    bool in_budget = elapsed < 1.0;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "11 dimensions exact, %.3f s (budget 1 s)",
                  elapsed);
    return {ok && in_budget, buf};
}

Outcome criterion_non_improvement() {
    const std::map<int, Rational> prior = {
        {6, Rational(1, 2)},
        {8, Rational(4, 11)},
        {10, Rational(2, 7)},
        {12, Rational(4, 17)},
    };
    bool ok = true;
    for (const auto& [n, frac] : prior)
        ok = ok && (linear_exponent(n).p >= Rational(2) + frac);
    return {ok, "n in {6,8,10,12} never beat the registry (exact >=)"};
}

Outcome criterion_closed_form() {
    auto start = Clock::now();
    bool ok = true;
    for (int n = 2; n <= 200 && ok; ++n)
        for (int k = 2; k <= n && ok; ++k)
            ok = (dyadic_product(k, n) == dyadic_product_factorial(k, n));
    double elapsed = seconds_since(start);
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "all 2<=k<=n<=200 equal, %.2f s (budget 5 s)", elapsed);
    return {ok && elapsed < 5.0, buf};
}

Outcome criterion_appendix() {
    auto start = Clock::now();
    bool ok = true;
    for (long i = 1; i <= 100000 && ok; ++i) ok = chain_inequality_check(i);
    for (int n = 3; n <= 200 && ok; ++n)
        for (int k = 2; k < n && ok; ++k) {
            auto [lo, hi] = appendix_product_bounds(n, k);
            ok = lo && hi;
        }
    double elapsed = seconds_since(start);
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "chain i<=1e5 and bounds 2<=k<n<=200, %.2f s (budget 30 s)",
                  elapsed);
    return {ok && elapsed < 30.0, buf};
}

Outcome criterion_identities() {
    auto start = Clock::now();
    bool ok = true;
    for (int n = 3; n <= 100 && ok; ++n)
        for (int m = 0; m <= n - 2 && ok; ++m) {
            VerifyReport rep = verify_identities(n, m);
            ok = rep.all_zero && rep.p0_closed_form_match && rep.gamma_invariants;
        }
    bool symbolic_ok = true;
    for (int m = 1; m <= 12 && symbolic_ok; ++m) {
        SymbolicReport rep = verify_identities_symbolic(m);
        symbolic_ok = rep.all_zero && rep.p0_closed_form_match && rep.gamma_sum_is_one;
    }
    // Hand-oracle anchor at (5, 2).
    bool anchor = gamma_weights(5, 2) ==
                  std::vector<Rational>{Rational(50, 63), Rational(4, 63), Rational(1, 7)};
    anchor = anchor && lebesgue_exponents(5, 2) ==
                           std::vector<Rational>{Rational(263, 100), Rational(25, 9), Rational(3)};
    auto [beta, alpha] =
        beta_ratios(lebesgue_exponents(5, 2), BetaConvention::reciprocal);
    (void)alpha;
    anchor = anchor && beta == std::vector<Rational>{Rational(1), Rational(225, 263),
                                                     Rational(189, 263)};
    double elapsed = seconds_since(start);
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "numeric n<=100, symbolic m<=12, (5,2) anchor, %.2f s", elapsed);
    return {ok && symbolic_ok && anchor, buf};
}

Outcome criterion_cubic() {
    Interval root = solve_cubic(64);
    Interval cardano = cardano_root(64);
    NuLambda nl = nu_lambda(64);
    auto cubic_value = [](const Rational& x) {
        return Rational(2) * x * x * x + Rational(3) * x * x - Rational(2);
    };
    bool window = Rational(67765, 100000) <= root.lo() &&
                  root.hi() <= Rational(67766, 100000);
    bool lambda_window = Rational(259607, 100000) <= nl.lambda.lo() &&
                         nl.lambda.hi() <= Rational(259608, 100000);
    bool intersect = root.intersects(cardano);
    bool guard = root.width() > Rational(0) &&
                 !cubic_value(root.lo()).is_zero() &&
                 !cubic_value(root.hi()).is_zero();
    return {window && lambda_window && intersect && guard,
            "root in 0.67765-window, lambda in 2.59607-window, enclosures "
            "intersect, no exact rational reported"};
}

Outcome criterion_convergence() {
    auto start = Clock::now();
    Interval lambda = nu_lambda(128).lambda;
    struct Point {
        long n;
        int k_opt;
        Interval dev;
    };
    std::vector<Point> pts;
    for (long n : {1000L, 10000L, 100000L}) {
        LinearResult lin = linear_exponent(static_cast<int>(n));
        Rational gap = Rational(n) * (lin.p - Rational(2));
        pts.push_back({n, lin.k_opt, (Interval(gap) - lambda).abs()});
    }
    // Tolerance pinned by the pre-build oracle run: 10^-3 at n = 10^4
    // (measured deviation 2.04e-4; the provisional figure was 0.05).
    bool tol = pts[1].dev.hi() <= Rational(1, 1000);
    bool decreasing = pts[1].dev.hi() < pts[0].dev.lo() &&
                      pts[2].dev.hi() < pts[1].dev.lo();
    bool tomas = tomas_gap(1000) > tomas_gap(10000) &&
                 tomas_gap(10000) > tomas_gap(100000) &&
                 tomas_gap(100000) - Rational(4) == Rational(4, 99999);
    bool k_track = pts[0].k_opt == 460 && pts[1].k_opt == 4593 &&
                   pts[2].k_opt == 45922;
    double elapsed = seconds_since(start);
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "dev(1e4) <= 1e-3 (pinned), certified decrease over "
                  "{1e3,1e4,1e5}, tomas -> 4, %.2f s",
                  elapsed);
    return {tol && decreasing && tomas && k_track, buf};
}

Outcome criterion_wolff() {
    auto start = Clock::now();

    // (a) 100-seed falsification suite.
    bool no_violation = true;
    double worst_ratio = 0;
    const std::vector<std::pair<int, int>> shapes = {{3, 1}, {3, 2}, {4, 2}, {5, 3}};
    for (const auto& [n, m] : shapes)
        for (double R : {1e3, 1e4}) {
            TrialConfig cfg;
            cfg.n = n;
            cfg.m = m;
            cfg.R = R;
            cfg.C = 10.0;
            cfg.eps = 0.1;
            cfg.budget = 20000;
            for (std::uint64_t seed = 1; seed <= 100 && no_violation; ++seed) {
                TrialReport rep = falsification_trial(seed, cfg);
                no_violation = no_violation && !rep.violated;
                worst_ratio = std::max(worst_ratio, rep.ratio);
            }
        }
    double suite_elapsed = seconds_since(start);
    bool suite_in_budget = suite_elapsed < 300.0;

    // (b) extremal witness at (3, 1, 1e4).
    auto family = extremal_family(3, 1, 1e4);
    AffineFlag flag = extremal_flag(3, 1, 1e4);
    long passing = count_satisfying(family, flag);
    double bound = theorem_bound(3, 1, 1e4, {1e4}, {100.0}, 0.0, 1.0);
    bool extremal_ok = passing == static_cast<long>(family.size()) &&
                       static_cast<double>(passing) >= 0.01 * bound;

    // (c) Monte Carlo control on 10^3 random occupancy instances.
    std::mt19937_64 rng(20240824u);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int tested = 0, agreed = 0;
    while (tested < 1000) {
        int n = 2 + static_cast<int>(unif(rng) * 4.99);
        int j = 1 + static_cast<int>(unif(rng) * (n - 1) * 0.999);
        Eigen::MatrixXd A(n, j);
        for (int c = 0; c < j; ++c)
            for (int row = 0; row < n; ++row) A(row, c) = gauss(rng);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
        Eigen::MatrixXd frame = qr.householderQ() * Eigen::MatrixXd::Identity(n, j);
        Eigen::VectorXd offset(n), base(n), raw(n);
        for (int i = 0; i < n; ++i) {
            offset(i) = 4.0 * gauss(rng);
            base(i) = 4.0 * gauss(rng);
            raw(i) = gauss(rng);
        }
        if (raw.norm() < 1e-6) continue;
        Line line(base, raw / raw.norm());
        AffineSubspace V{frame, offset};
        Ball ball{Eigen::VectorXd::Zero(n), 6.0 + 10.0 * unif(rng)};
        double rho = 0.5 + 3.0 * unif(rng);
        Eigen::VectorXd d = line.base - ball.center;
        double B = line.dir.dot(d);
        double disc = B * B - (d.squaredNorm() - ball.radius * ball.radius);
        if (disc <= 1e-9) continue;
        double chord = 2.0 * std::sqrt(disc);
        double exact = line_occupancy(line, V, rho, ball);
        double mc = line_occupancy_mc(line, V, rho, ball, 100000,
                                      1000003u + static_cast<std::uint64_t>(tested));
        if (std::abs(exact - mc) <= 0.01 * chord) ++agreed;
        ++tested;
    }
    bool mc_ok = agreed == tested;

    double elapsed = seconds_since(start);
    char buf[240];
    std::snprintf(buf, sizeof(buf),
                  "800 trials violation-free (worst ratio %.4f, %.0f s), "
                  "extremal %ld/%zu lines vs bound %.0f, MC %d/%d within 1%% "
                  "of chord, total %.0f s",
                  worst_ratio, suite_elapsed, passing, family.size(), bound,
                  agreed, tested, elapsed);
    return {no_violation && suite_in_budget && extremal_ok && mc_ok, buf};
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {"figure-2 exponent table", criterion_figure2},
        {"non-improvement rows", criterion_non_improvement},
        {"product closed-form equivalence", criterion_closed_form},
        {"appendix inequalities", criterion_appendix},
        {"multigrain identities", criterion_identities},
        {"cubic root and lambda enclosures", criterion_cubic},
        {"asymptotic convergence", criterion_convergence},
        {"wolff falsification lab", criterion_wolff},
    };
    bool all = true;
    int index = 0;
    for (const Entry& entry : entries) {
        ++index;
        auto start = Clock::now();
        Outcome outcome = entry.fn();
        double elapsed = seconds_since(start);
        all = all && outcome.pass;
        std::printf("%s criterion %d: %s [%s] (%.2f s)\n",
                    outcome.pass ? "PASS" : "FAIL", index, entry.name,
                    outcome.detail.c_str(), elapsed);
        std::fflush(stdout);
    }
    std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
    return all ? 0 : 1;
}
