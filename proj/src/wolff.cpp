#include "broadexp/wolff.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "broadexp/rational.hpp"  // ResourceError
#include "json.hpp"

namespace broadexp {

namespace {

constexpr double kRelGuard = 1e-9;
constexpr double kLatticeCap = 1e7;

double lattice_spacing(int n, double R) {
  return 0.5 / std::sqrt(static_cast<double>(n - 1)) / std::sqrt(R);
}

void require_desk_scale(int n, double R) {
  if (n < 2 || n > 6)
    throw std::domain_error("wolff lab: need 2 <= n <= 6 (desk scale)");
  if (R < 4) throw std::domain_error("wolff lab: need R >= 4");
}

Eigen::VectorXd lattice_direction(const Eigen::VectorXd& omega) {
  int n = static_cast<int>(omega.size()) + 1;
  Eigen::VectorXd g(n);
  g.head(n - 1) = -2.0 * omega;
  g(n - 1) = 1.0;
  return g / g.norm();
}

// Visits every k in {-K..K}^dim, calling f(k).  Lexicographic order keeps
// every caller deterministic.
template <class F>
void for_each_box(int dim, long K, std::array<long, 5>& k, int coord, F&& f) {
  if (coord == dim) {
    f(k);
    return;
  }
  for (long v = -K; v <= K; ++v) {
    k[static_cast<size_t>(coord)] = v;
    for_each_box(dim, K, k, coord + 1, f);
  }
}

Eigen::VectorXd omega_of(const std::array<long, 5>& k, int dim, double h) {
  Eigen::VectorXd omega(dim);
  for (int i = 0; i < dim; ++i) omega(i) = h * static_cast<double>(k[static_cast<size_t>(i)]);
  return omega;
}

Eigen::VectorXd gaussian_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = gauss(rng);
  return v;
}

Eigen::VectorXd uniform_ball(int n, double radius, std::mt19937_64& rng) {
  if (radius <= 0) return Eigen::VectorXd::Zero(n);
  Eigen::VectorXd v = gaussian_vector(n, rng);
  double norm = v.norm();
  if (norm == 0) return Eigen::VectorXd::Zero(n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double scale = radius * std::pow(unit(rng), 1.0 / n);
  return v * (scale / norm);
}

}  // namespace

Line::Line(Eigen::VectorXd base_point, Eigen::VectorXd direction)
    : base(std::move(base_point)), dir(std::move(direction)) {
  if (base.size() != dir.size())
    throw std::domain_error("Line: base and direction dimensions differ");
  if (std::abs(dir.norm() - 1.0) > 1e-12)
    throw std::domain_error("Line: direction is not a unit vector");
}

double AffineSubspace::distance(const Eigen::VectorXd& x) const {
  return (conormals.transpose() * (x - offset)).norm();
}

AffineFlag AffineFlag::validated(std::vector<AffineSubspace> subspaces,
                                 std::vector<Ball> balls,
                                 std::vector<double> rho, double R) {
  size_t m = subspaces.size();
  if (m == 0) throw std::domain_error("AffineFlag: need at least one level");
  if (balls.size() != m || rho.size() != m)
    throw std::domain_error("AffineFlag: subspaces, balls, rho size mismatch");
  if (R < 1) throw std::domain_error("AffineFlag: need R >= 1");

  int n = subspaces.front().ambient_dim();
  for (size_t j = 0; j < m; ++j) {
    const AffineSubspace& V = subspaces[j];
    if (V.ambient_dim() != n || V.offset.size() != n ||
        balls[j].center.size() != n)
      throw std::domain_error("AffineFlag: inconsistent ambient dimension");
    if (V.codim() != static_cast<int>(j) + 1)
      throw std::domain_error("AffineFlag: codim V_j must equal j");
    Eigen::MatrixXd gram =
        V.conormals.transpose() * V.conormals -
        Eigen::MatrixXd::Identity(V.codim(), V.codim());
    if (gram.cwiseAbs().maxCoeff() > 1e-9)
      throw std::domain_error("AffineFlag: conormal frame not orthonormal");
  }

  for (size_t j = 0; j + 1 < m; ++j) {
    const AffineSubspace& outer = subspaces[j];
    const AffineSubspace& inner = subspaces[j + 1];
    // V_{j+1} subset V_j: the inner offset satisfies the outer equations and
    // the outer conormal space sits inside the inner one.
    double offset_tol =
        kRelGuard * (1.0 + outer.offset.norm() + inner.offset.norm());
    if (outer.distance(inner.offset) > offset_tol)
      throw std::domain_error("AffineFlag: offsets break subspace nesting");
    Eigen::MatrixXd residual =
        outer.conormals -
        inner.conormals * (inner.conormals.transpose() * outer.conormals);
    if (residual.cwiseAbs().maxCoeff() > 1e-8)
      throw std::domain_error("AffineFlag: conormal spaces break nesting");
  }

  for (size_t j = 0; j < m; ++j) {
    double r = balls[j].radius;
    if (!(r >= 1 - kRelGuard && r <= R * (1 + kRelGuard)))
      throw std::domain_error("AffineFlag: radius outside [1, R]");
    if (!(rho[j] >= 1 - kRelGuard && rho[j] <= R * (1 + kRelGuard)))
      throw std::domain_error("AffineFlag: width outside [1, R]");
    if (j > 0) {
      if (balls[j].radius > balls[j - 1].radius * (1 + kRelGuard))
        throw std::domain_error("AffineFlag: radii not non-increasing");
      if (rho[j] > rho[j - 1] * (1 + kRelGuard))
        throw std::domain_error("AffineFlag: widths not non-increasing");
      double gap = (balls[j].center - balls[j - 1].center).norm();
      if (gap + balls[j].radius >
          balls[j - 1].radius * (1 + kRelGuard) + kRelGuard)
        throw std::domain_error("AffineFlag: balls not nested");
    }
  }
  if (rho[0] / balls[0].radius < std::pow(R, -0.5) * (1 - kRelGuard))
    throw std::domain_error("AffineFlag: need R^{-1/2} <= rho_1/r_1");

  AffineFlag flag;
  flag.n_ = n;
  flag.R_ = R;
  flag.subspaces_ = std::move(subspaces);
  flag.balls_ = std::move(balls);
  flag.rho_ = std::move(rho);
  return flag;
}

std::vector<Eigen::VectorXd> direction_lattice(int n, double R) {
  require_desk_scale(n, R);
  int dim = n - 1;
  double h = lattice_spacing(n, R);
  long K = static_cast<long>(std::floor(1.0 / h));
  if (std::pow(2.0 * K + 1.0, dim) > kLatticeCap)
    throw ResourceError("direction_lattice: more than 10^7 lattice points");
  std::vector<Eigen::VectorXd> dirs;
  std::array<long, 5> k{};
  for_each_box(dim, K, k, 0, [&](const std::array<long, 5>& kk) {
    Eigen::VectorXd omega = omega_of(kk, dim, h);
    if (omega.squaredNorm() < 1.0) dirs.push_back(lattice_direction(omega));
  });
  return dirs;
}

double line_occupancy(const Line& line, const AffineSubspace& V, double rho,
                      const Ball& ball) {
  if (rho <= 0) throw std::domain_error("line_occupancy: need rho > 0");
  // Chord through the ball: |base + t dir - center|^2 <= radius^2 with
  // |dir| = 1 is t^2 + 2Bt + C <= 0.
  Eigen::VectorXd d = line.base - ball.center;
  double B = line.dir.dot(d);
  double C = d.squaredNorm() - ball.radius * ball.radius;
  double disc = B * B - C;
  if (disc <= 0) return 0.0;
  double half = std::sqrt(disc);
  double chord_lo = -B - half, chord_hi = -B + half;

  // Slab around V: |w + t u|^2 <= rho^2 is a quadratic with leading
  // coefficient |u|^2; u = 0 means the line runs parallel to V.
  Eigen::VectorXd u = V.conormals.transpose() * line.dir;
  Eigen::VectorXd w = V.conormals.transpose() * (line.base - V.offset);
  double a = u.squaredNorm();
  if (a < 1e-30)
    return w.squaredNorm() <= rho * rho ? chord_hi - chord_lo : 0.0;
  double bq = w.dot(u);
  double cq = w.squaredNorm() - rho * rho;
  double disc2 = bq * bq - a * cq;
  if (disc2 <= 0) return 0.0;
  double half2 = std::sqrt(disc2);
  double slab_lo = (-bq - half2) / a, slab_hi = (-bq + half2) / a;

  return std::max(0.0, std::min(chord_hi, slab_hi) - std::max(chord_lo, slab_lo));
}

double line_occupancy_mc(const Line& line, const AffineSubspace& V, double rho,
                         const Ball& ball, int samples, std::uint64_t seed) {
  if (rho <= 0) throw std::domain_error("line_occupancy_mc: need rho > 0");
  if (samples < 1) throw std::domain_error("line_occupancy_mc: need samples >= 1");
  Eigen::VectorXd d = line.base - ball.center;
  double B = line.dir.dot(d);
  double C = d.squaredNorm() - ball.radius * ball.radius;
  double disc = B * B - C;
  if (disc <= 0) return 0.0;
  double half = std::sqrt(disc);
  double chord_lo = -B - half, chord_hi = -B + half;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pick(chord_lo, chord_hi);
  long hits = 0;
  for (int i = 0; i < samples; ++i) {
    double t = pick(rng);
    if (V.distance(line.base + t * line.dir) <= rho) ++hits;
  }
  return (chord_hi - chord_lo) * static_cast<double>(hits) / samples;
}

long count_satisfying(const std::vector<Line>& lines, const AffineFlag& flag) {
  long count = 0;
  for (const Line& line : lines) {
    bool ok = true;
    for (int j = 1; j <= flag.m() && ok; ++j) {
      double occ = line_occupancy(line, flag.subspace(j), flag.rho(j), flag.ball(j));
      ok = occ >= flag.r(j) * (1 - kRelGuard);
    }
    if (ok) ++count;
  }
  return count;
}

double theorem_bound(int n, int m, double R, const std::vector<double>& r,
                     const std::vector<double>& rho, double eps, double C) {
  if (n < 2) throw std::domain_error("theorem_bound: need n >= 2");
  if (m < 0) throw std::domain_error("theorem_bound: need m >= 0");
  if (R < 1) throw std::domain_error("theorem_bound: need R >= 1");
  if (eps < 0 || C <= 0)
    throw std::domain_error("theorem_bound: need eps >= 0 and C > 0");
  if (r.size() != static_cast<size_t>(m) || rho.size() != static_cast<size_t>(m))
    throw std::domain_error("theorem_bound: r and rho must have length m");
  double prod = 1.0;
  for (int j = 0; j < m; ++j) {
    if (r[static_cast<size_t>(j)] <= 0 || rho[static_cast<size_t>(j)] <= 0)
      throw std::domain_error("theorem_bound: need positive r_j, rho_j");
    prod *= rho[static_cast<size_t>(j)] / r[static_cast<size_t>(j)];
  }
  return C * prod * std::pow(R, 0.5 * (n - 1) + eps);
}

namespace {

// Direction family for one trial: the full lattice when it fits the budget,
// otherwise a seeded sample of `budget` distinct lattice points.
std::vector<Eigen::VectorXd> direction_sample(int n, double R, long budget,
                                              std::mt19937_64& rng) {
  int dim = n - 1;
  double h = lattice_spacing(n, R);
  long K = static_cast<long>(std::floor(1.0 / h));
  double box = std::pow(2.0 * K + 1.0, dim);

  if (box <= static_cast<double>(budget))
    return direction_lattice(n, R);

  if (box <= kLatticeCap) {
    // Count the in-ball points, choose `budget` ranks without replacement
    // (Floyd), then materialize the chosen ranks on a second pass.
    long total = 0;
    std::array<long, 5> k{};
    for_each_box(dim, K, k, 0, [&](const std::array<long, 5>& kk) {
      if (omega_of(kk, dim, h).squaredNorm() < 1.0) ++total;
    });
    if (total <= budget) return direction_lattice(n, R);
    std::unordered_set<long> chosen;
    for (long j = total - budget; j < total; ++j) {
      std::uniform_int_distribution<long> pick(0, j);
      long t = pick(rng);
      if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<Eigen::VectorXd> dirs;
    dirs.reserve(static_cast<size_t>(budget));
    long rank = 0;
    for_each_box(dim, K, k, 0, [&](const std::array<long, 5>& kk) {
      Eigen::VectorXd omega = omega_of(kk, dim, h);
      if (omega.squaredNorm() < 1.0) {
        if (chosen.count(rank)) dirs.push_back(lattice_direction(omega));
        ++rank;
      }
    });
    return dirs;
  }

  // Huge lattice: rejection-sample distinct points.  Acceptance is at least
  // the ball/box volume ratio (> 0.1 for n <= 6), so the attempt cap is
  // never reached in practice.
  std::set<std::array<long, 5>> seen;
  std::vector<Eigen::VectorXd> dirs;
  std::uniform_int_distribution<long> coord(-K, K);
  long attempts = 0, max_attempts = 1000 * budget;
  while (static_cast<long>(dirs.size()) < budget) {
    if (++attempts > max_attempts)
      throw ResourceError("direction_sample: rejection sampling stalled");
    std::array<long, 5> kk{};
    for (int i = 0; i < dim; ++i) kk[static_cast<size_t>(i)] = coord(rng);
    Eigen::VectorXd omega = omega_of(kk, dim, h);
    if (omega.squaredNorm() >= 1.0) continue;
    if (!seen.insert(kk).second) continue;
    dirs.push_back(lattice_direction(omega));
  }
  return dirs;
}

}  // namespace

TrialReport falsification_trial(std::uint64_t seed, const TrialConfig& config) {
  require_desk_scale(config.n, config.R);
  if (config.m < 1 || config.m > config.n - 1)
    throw std::domain_error("falsification_trial: need 1 <= m <= n-1");
  if (config.R > 1e6)
    throw ResourceError("falsification_trial: R above 10^6 exceeds the budget");
  if (config.budget < 1 || config.budget > 1000000)
    throw ResourceError("falsification_trial: line budget outside [1, 10^6]");
  if (config.flag_distribution != "uniform")
    throw std::domain_error("falsification_trial: unknown flag distribution '" +
                            config.flag_distribution + "'");
  int n = config.n, m = config.m;
  std::vector<double> r = config.r.empty()
                              ? std::vector<double>(static_cast<size_t>(m), config.R)
                              : config.r;
  std::vector<double> rho =
      config.rho.empty()
          ? std::vector<double>(static_cast<size_t>(m), std::sqrt(config.R))
          : config.rho;
  if (r.size() != static_cast<size_t>(m) || rho.size() != static_cast<size_t>(m))
    throw std::domain_error("falsification_trial: r and rho must have length m");

  std::mt19937_64 rng(seed);
  std::vector<Eigen::VectorXd> dirs =
      direction_sample(n, config.R, config.budget, rng);

  // Random flag: Haar conormal frame (QR of a Gaussian matrix), one shared
  // offset, ball centers drifting within the nesting slack.
  Eigen::MatrixXd A(n, m);
  for (int col = 0; col < m; ++col) A.col(col) = gaussian_vector(n, rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
  Eigen::MatrixXd frame =
      qr.householderQ() * Eigen::MatrixXd::Identity(n, m);
  Eigen::VectorXd offset = uniform_ball(n, config.R / 4, rng);

  std::vector<AffineSubspace> subspaces;
  for (int j = 1; j <= m; ++j)
    subspaces.push_back({frame.leftCols(j), offset});

  std::vector<Ball> balls;
  Eigen::VectorXd center = offset + uniform_ball(n, r[0] / 8, rng);
  balls.push_back({center, r[0]});
  for (int j = 1; j < m; ++j) {
    double slack = std::max(0.0, r[static_cast<size_t>(j) - 1] - r[static_cast<size_t>(j)]);
    center = center + uniform_ball(n, 0.9 * slack, rng);
    balls.push_back({center, r[static_cast<size_t>(j)]});
  }
  AffineFlag flag = AffineFlag::validated(subspaces, balls, rho, config.R);

  std::vector<Line> lines;
  lines.reserve(dirs.size());
  for (const auto& dir : dirs)
    lines.emplace_back(balls.front().center + uniform_ball(n, config.R, rng), dir);

  TrialReport report;
  report.seed = seed;
  report.n = n;
  report.m = m;
  report.R = config.R;
  report.r = r;
  report.rho = rho;
  report.line_count = static_cast<long>(lines.size());
  report.count = count_satisfying(lines, flag);
  report.bound = theorem_bound(n, m, config.R, r, rho, config.eps, config.C);
  report.ratio = static_cast<double>(report.count) / report.bound;
  report.violated = static_cast<double>(report.count) > report.bound;
  return report;
}

std::vector<Line> extremal_family(int n, int j, double R) {
  require_desk_scale(n, R);
  if (j < 1 || j > n - 1)
    throw std::domain_error("extremal_family: need 1 <= j <= n-1");
  int dim = n - 1;
  double h = lattice_spacing(n, R);
  long K = static_cast<long>(std::floor(1.0 / h));
  double thresh = std::pow(R, -0.5);
  // Conormal coordinates of V are the last j of the omega block, so the
  // direction constraint caps them near 0 and only the free block ranges.
  long Kc = static_cast<long>(std::floor(0.5 * thresh * std::sqrt(5.0) / h)) + 1;
  double box = std::pow(2.0 * K + 1.0, dim - j) * std::pow(2.0 * Kc + 1.0, j);
  if (box > kLatticeCap)
    throw ResourceError("extremal_family: candidate lattice exceeds 10^7");

  std::vector<Line> family;
  Eigen::VectorXd origin = Eigen::VectorXd::Zero(n);
  std::array<long, 5> k{};
  auto visit = [&](const std::array<long, 5>& kk) {
    Eigen::VectorXd omega = omega_of(kk, dim, h);
    if (omega.squaredNorm() >= 1.0) return;
    Eigen::VectorXd u = lattice_direction(omega);
    double perp = u.segment(dim - j, j).norm();
    if (perp <= thresh) family.emplace_back(origin, u);
  };
  // Nested enumeration with the tighter conormal ranges.
  std::function<void(int)> recurse = [&](int coord) {
    if (coord == dim) {
      visit(k);
      return;
    }
    long bound = coord < dim - j ? K : Kc;
    for (long v = -bound; v <= bound; ++v) {
      k[static_cast<size_t>(coord)] = v;
      recurse(coord + 1);
    }
  };
  recurse(0);
  return family;
}

AffineFlag extremal_flag(int n, int j, double R) {
  require_desk_scale(n, R);
  if (j < 1 || j > n - 1)
    throw std::domain_error("extremal_flag: need 1 <= j <= n-1");
  int dim = n - 1;
  std::vector<AffineSubspace> subspaces;
  std::vector<Ball> balls;
  std::vector<double> rho;
  Eigen::VectorXd origin = Eigen::VectorXd::Zero(n);
  for (int level = 1; level <= j; ++level) {
    // V_level = {x : x_i = 0 for the last `level` omega coordinates}: the
    // chain of coordinate subspaces shrinking onto V_j.
    Eigen::MatrixXd conormals = Eigen::MatrixXd::Zero(n, level);
    for (int c = 0; c < level; ++c) conormals(dim - level + c, c) = 1.0;
    subspaces.push_back({conormals, origin});
    balls.push_back({origin, R});
    rho.push_back(std::sqrt(R));
  }
  return AffineFlag::validated(subspaces, balls, rho, R);
}

TrialSuite trial_suite_from_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  TrialSuite suite;
  suite.config.n = doc.at("n").get<int>();
  suite.config.m = doc.at("m").get<int>();
  suite.config.R = doc.at("R").get<double>();
  if (doc.contains("r")) suite.config.r = doc["r"].get<std::vector<double>>();
  if (doc.contains("rho"))
    suite.config.rho = doc["rho"].get<std::vector<double>>();
  if (doc.contains("C")) suite.config.C = doc["C"].get<double>();
  if (doc.contains("eps")) suite.config.eps = doc["eps"].get<double>();
  if (doc.contains("budget")) suite.config.budget = doc["budget"].get<long>();
  if (doc.contains("flag_distribution"))
    suite.config.flag_distribution = doc["flag_distribution"].get<std::string>();
  suite.seeds = doc.at("seeds").get<std::vector<std::uint64_t>>();
  if (suite.seeds.empty())
    throw std::domain_error("trial suite: need at least one seed");
  return suite;
}

std::string trial_report_jsonline(const TrialReport& report) {
  nlohmann::json obj{
      {"seed", report.seed},
      {"n", report.n},
      {"m", report.m},
      {"R", report.R},
      {"r", report.r},
      {"rho", report.rho},
      {"line_count", report.line_count},
      {"count", report.count},
      {"bound", report.bound},
      {"ratio", report.ratio},
      {"violated", report.violated},
      {"model", report.model},
      {"generator", report.generator},
  };
  return obj.dump() + "\n";
}

}  // namespace broadexp
