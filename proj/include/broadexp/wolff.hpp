#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace broadexp {

// A line t -> base + t * dir in R^n with |dir| = 1 (within 1e-12, checked at
// construction).
struct Line {
  Eigen::VectorXd base;
  Eigen::VectorXd dir;

  Line(Eigen::VectorXd base_point, Eigen::VectorXd direction);
};

// Affine subspace {x : conormals^T (x - offset) = 0}: codimension = number of
// orthonormal conormal columns.
struct AffineSubspace {
  Eigen::MatrixXd conormals;  // n x j, orthonormal columns
  Eigen::VectorXd offset;     // any point of the subspace

  int ambient_dim() const { return static_cast<int>(conormals.rows()); }
  int codim() const { return static_cast<int>(conormals.cols()); }
  // |conormals^T (x - offset)|, the exact Euclidean distance to the subspace.
  double distance(const Eigen::VectorXd& x) const;
};

struct Ball {
  Eigen::VectorXd center;
  double radius = 0;
};

// Nested chain V_1 > V_2 > ... > V_m of affine subspaces with codim V_j = j,
// nested balls B_{r_1} >= ... >= B_{r_m}, slab widths rho_1 >= ... >= rho_m,
// and the global scale R.  Construction verifies every nesting invariant:
// orthonormal frames, subspace containment, ball containment, both sequences
// non-increasing inside [1, R], and R^{-1/2} <= rho_1/r_1.  Comparisons use a
// 1e-9 relative guard.
class AffineFlag {
 public:
  static AffineFlag validated(std::vector<AffineSubspace> subspaces,
                              std::vector<Ball> balls, std::vector<double> rho,
                              double R);

  int n() const { return n_; }
  int m() const { return static_cast<int>(subspaces_.size()); }
  double R() const { return R_; }
  // Level j is 1-based to match the math.
  const AffineSubspace& subspace(int j) const { return subspaces_.at(j - 1); }
  const Ball& ball(int j) const { return balls_.at(j - 1); }
  double r(int j) const { return balls_.at(j - 1).radius; }
  double rho(int j) const { return rho_.at(j - 1); }

 private:
  AffineFlag() = default;
  int n_ = 0;
  double R_ = 0;
  std::vector<AffineSubspace> subspaces_;
  std::vector<Ball> balls_;
  std::vector<double> rho_;
};

// The R^{-1/2}-separated direction set: frequency lattice points
// omega in c_n R^{-1/2} Z^{n-1} intersected with the open unit ball, mapped
// through G(omega) = (-2 omega, 1) and normalized; c_n = 1/(2 sqrt(n-1)).
// Requires 2 <= n <= 6 and R >= 4; ResourceError if the lattice would exceed
// 10^7 points.
std::vector<Eigen::VectorXd> direction_lattice(int n, double R);

// Exact length of {t : line(t) in ball and dist(line(t), V) <= rho}.  The
// squared distance is a quadratic in t, so the set is an intersection of at
// most two intervals, solved in closed form.  Requires rho > 0.
double line_occupancy(const Line& line, const AffineSubspace& V, double rho,
                      const Ball& ball);

// Monte Carlo control for line_occupancy: uniform 1-D sampling over the
// line's ball chord.  Used by the test harness to cross-check the closed
// form; same signature conventions.
double line_occupancy_mc(const Line& line, const AffineSubspace& V, double rho,
                         const Ball& ball, int samples, std::uint64_t seed);

// Number of lines with line_occupancy(l, V_j, rho_j, B_{r_j}) >= r_j at every
// level j (with the 1e-9 relative guard on the threshold).
long count_satisfying(const std::vector<Line>& lines, const AffineFlag& flag);

// C * prod_j (rho_j / r_j) * R^{(n-1)/2 + eps}.  r and rho must both have
// length m; m = 0 gives the empty product.
double theorem_bound(int n, int m, double R, const std::vector<double>& r,
                     const std::vector<double>& rho, double eps, double C);

struct TrialConfig {
  int n = 3;
  int m = 1;
  double R = 1e4;
  std::vector<double> r;    // per level; empty selects r_j = R
  std::vector<double> rho;  // per level; empty selects rho_j = sqrt(R)
  double C = 10.0;
  double eps = 0.1;
  long budget = 20000;      // direction subsample cap
  std::string flag_distribution = "uniform";
};

struct TrialReport {
  std::uint64_t seed = 0;
  int n = 0, m = 0;
  double R = 0;
  std::vector<double> r, rho;
  long line_count = 0;  // size of the sampled family
  long count = 0;       // lines passing every occupancy condition
  double bound = 0;
  double ratio = 0;       // count / bound
  bool violated = false;  // count > bound — a reportable finding
  // The occupancy model is a simplified surrogate (affine subspaces, not
  // general varieties); every report carries the label.
  std::string model = "affine-flag line surrogate";
  std::string generator = "mt19937_64";
};

// One deterministic experiment: a direction-separated line family (one line
// per sampled lattice direction, bases uniform in the R-ball around the first
// ball center), a random affine flag drawn per config.flag_distribution, and
// count vs bound.  Requires 2 <= n <= 6, m <= n-1, 4 <= R <= 10^6,
// budget <= 10^6.
TrialReport falsification_trial(std::uint64_t seed, const TrialConfig& config);

// A near-extremal witness: one line per lattice direction within R^{-1/2}
// angle of a fixed codimension-j coordinate subspace V, based at the origin
// (inside V), so each line has full occupancy in N_{R^{1/2}} V within B_R.
// Requires 2 <= n <= 6, 1 <= j <= n-1, R >= 4.
std::vector<Line> extremal_family(int n, int j, double R);

// The coordinate subspace used by extremal_family, with balls/widths for the
// (r, rho) = (R, sqrt(R)) occupancy regime it is extremal for.
AffineFlag extremal_flag(int n, int j, double R);

// JSON plumbing: config documents {n, m, R, r[], rho[], seeds[], C, eps,
// budget} and one-report-per-line serialization.
struct TrialSuite {
  TrialConfig config;
  std::vector<std::uint64_t> seeds;
};
TrialSuite trial_suite_from_json(const std::string& text);
std::string trial_report_jsonline(const TrialReport& report);

}  // namespace broadexp
