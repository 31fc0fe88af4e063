#pragma once

#include <optional>
#include <string>
#include <vector>

#include "broadexp/broad.hpp"

namespace broadexp {

// Bourgain-Guth lower edge of the broad-to-linear range: 2 + 4/(2n - k).
// Requires 2 <= k <= n.
Rational p_limit(int n, int k);

// Upper edge 2 + 2/(k - 2) for k >= 3; k = 2 is unconstrained and returns
// nullopt (the infinity marker).
std::optional<Rational> p_upper_bg(int n, int k);

// Outcome of minimizing max(p_broad(n, k), p_limit(n, k)) over 2 <= k <= n.
struct LinearResult {
  int n = 0;
  int k_opt = 0;         // smallest optimal k when the minimum is tied
  Rational p;            // the linear restriction exponent
  Rational p_broad_at_k;
  Rational p_limit_at_k;
  bool upper_ok = true;  // p <= 2 + 2/(k_opt - 2) whenever that bound exists
  bool tie = false;      // some other k attains the same minimum
};

// Exact optimizer.  Requires n >= 3.  Uses a full sweep for moderate n and a
// monotone bracket search for large n (p_broad decreases strictly in k while
// p_limit increases, so the pointwise max is valley-shaped).
LinearResult linear_exponent(int n);

struct PriorEntry {
  int n = 0;
  Rational p;
  std::string attribution;
};

// Best previously published linear exponents, keyed by dimension.
class PriorRegistry {
 public:
  // The published record: Fefferman-Stein (n=2), Wang (3), Hickman-Rogers (4),
  // Guth (6, 8, 10, 12).
  static PriorRegistry defaults();

  void add(PriorEntry entry);
  const PriorEntry* find(int n) const;

 private:
  std::vector<PriorEntry> entries_;
};

struct TableRow {
  int n = 0;
  Rational new_p;
  int k_opt = 0;
  bool upper_ok = true;
  std::optional<PriorEntry> prior;
  std::string winner;  // "new" iff new_p is strictly smaller, else "prior"
};

// One row per dimension in [n_min, n_max].  Requires 3 <= n_min <= n_max.
std::vector<TableRow> state_of_art_table(int n_min, int n_max,
                                         const PriorRegistry& registry);

// Renderings.  CSV and JSON carry only integers and exact digit strings
// (columns n, new_num, new_den, prior_num, prior_den, winner, k_opt,
// upper_ok); text uses the whole-part display.
std::string table_text(const std::vector<TableRow>& rows);
std::string table_csv(const std::vector<TableRow>& rows);
std::string table_json(const std::vector<TableRow>& rows);

}  // namespace broadexp
