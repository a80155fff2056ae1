#pragma once

#include "cxwidths/multipliers.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cxw::widths {

using multipliers::MultiplierFamily;

/// L2 -> L2 Kolmogorov widths d_0 .. d_{n_max} of a diagonal operator.
struct WidthTable {
  std::optional<MultiplierFamily> fam;
  int d = 2;
  std::vector<double> values;
  bool non_compact = false;    // identity: constant table
  bool level_cap_hit = false;  // enumeration stopped at the level guard
  bool zero_tail = false;      // zero multipliers reached; table ends there
  std::string warning;

  static WidthTable from_values(std::vector<double> values);
};

constexpr int kMaxWidthLevel = 1000;

/// (value, multiplicity) pairs, one per level, for the family's grading.
std::vector<std::pair<double, Count>> multiplier_spectrum(const MultiplierFamily& fam, int d, int lmax);

/// Sorted-descending expansion of a spectrum, cut to n_max + 1 entries.
WidthTable width_table_from_spectrum(std::vector<std::pair<double, Count>> spectrum, std::size_t n_max);

WidthTable l2_width_table(const MultiplierFamily& fam, int d, std::size_t n_max);

enum class Model { power, power_log, stretched };
std::string to_string(Model m);
Model parse_model(const std::string& s);

struct FitRange {
  std::size_t lo = 1000;
  std::size_t hi = 0;  // 0 means "last entry"
};

struct FitResult {
  Model model = Model::power;
  double slope = 0.0;
  double intercept = 0.0;
  double log_coef = 0.0;        // power_log: coefficient of ln ln n (expected -xi)
  double exponent = 0.0;        // stretched: r/(2d-1)
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t points = 0;       // plateau left endpoints used
  double residual_rms = 0.0;
};

/// ln d_n against ln n (and ln ln n), one point per plateau (its first index).
FitResult fit_power(const WidthTable& t, FitRange range, bool with_log_factor);
/// ln d_n against n^{r/(2d-1)}.
FitResult fit_stretched(const WidthTable& t, int d, double r, FitRange range);

struct BoundSpec {
  std::string theorem;  // one of bound_ids()
  int d = 2;
  double gamma = 1.0;
  double xi = 0.0;
  double r = 1.0;
  double p = 2.0;
  double q = 2.0;
};

/// Bound shapes up to the unknown absolute constant.
struct BoundValue {
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<double> constant;
  std::string note;
};

/// kappa_m / vartheta_m: 1 or (ln m)^{-1/2} depending on (p,q); HypothesisError otherwise.
double log_selector(double p, double q, double m);

/// R = gamma (d!(d-1)!/2)^{r/(2d-1)}.
double constant_R(int d, double gamma, double r);
/// R* = gamma ((2d-1)!/2)^{r/(2d-1)}.
double constant_R_star(int d, double gamma, double r);

BoundValue bound_eval(const BoundSpec& spec, double m);
std::vector<std::string> bound_ids();

struct GradingReport {
  std::string model;  // "power", "stretched" or "none"
  bool non_compact = false;
  FitResult fit_star;
  FitResult fit_max;
  double slope_star = 0.0;
  double slope_max = 0.0;
  double ratio = 0.0;           // slope_star / slope_max
  double expected_ratio = 0.0;  // 1 for power families, R*/R for exp
  bool agree = false;           // power: |diff| <= 0.05; stretched: ratio within 3% of R*/R
  std::string note;
};

GradingReport grading_compare(const MultiplierFamily& fam, int d, std::size_t n_max, FitRange range = {});

} // namespace cxw::widths
