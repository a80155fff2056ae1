#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace cxw {

// Dimension counts for d <= 4, l <= 1e4 stay far below 2^127; overflow throws.
using Count = boost::multiprecision::checked_int128_t;

struct BiDegree {
  int m = 0;
  int n = 0;
  auto operator<=>(const BiDegree&) const = default;
};

enum class Grading { star, max };

std::string to_string(Grading g);
Grading parse_grading(const std::string& s);

/// |(m,n)| under the grading: m+n (star) or max{m,n} (max).
int level_of(BiDegree b, Grading g);

} // namespace cxw

namespace cxw::harmonic_dims {

/// binom(n, k) with binom(., k) = 0 for k < 0 or k > n >= 0.
Count binom(long n, long k);

Count dim_complex_harmonic(int d, BiDegree b);
Count dim_real_harmonic(int D, int k);

struct LayerSummary {
  int l = 0;
  std::vector<BiDegree> members;
  int a_l = 0;
  Count d_l = 0;
  Count cum_dim = 0;
};

/// Members of A_l \ A_{l-1}, lexicographic in (m,n).
std::vector<BiDegree> layer_members(int l, Grading g);
Count layer_dim(int d, int l, Grading g);

LayerSummary layer(int d, int l, Grading g);
/// Layers 0..lmax with running cum_dim; cheaper than calling layer() repeatedly.
std::vector<LayerSummary> layers(int d, int lmax, Grading g);

/// dim T_N = sum of d_l for l = 0..N.
Count dim_T(int d, int N, Grading g);

/// theta_{a,b} = sum_{j=a+1}^{b} d_j. Requires 0 <= a < b (a = -1 allowed and means "include level 0").
Count theta(int d, int a, int b, Grading g);

struct DimBoundRow {
  int l = 0;
  Count d_l = 0;
  double ratio = 0.0;        // d_l / l^{2d-2}
  double implied_C1 = 0.0;   // (lead*l^{2d-2} - d_l) / l^{2d-3}, lower-bound slack
  double implied_C2 = 0.0;   // (d_l - lead*l^{2d-2}) / l^{2d-3}
  double cum_ratio = 0.0;    // dim T_l / l^{2d-1}
};

struct DimBoundsReport {
  int d = 0;
  int lmin = 0;
  int lmax = 0;
  double lead = 0.0;      // 2(2d-1)/(d!(d-1)!)
  double cum_lead = 0.0;  // 2/(d!(d-1)!)
  std::vector<DimBoundRow> rows;
  double C1 = 0.0;  // smallest C1 with lead*l^{2d-2} - C1*l^{2d-3} <= d_l over the range
  double C2 = 0.0;  // smallest C2 with d_l <= lead*l^{2d-2} + C2*l^{2d-3}
  double final_ratio_error = 0.0;  // |ratio(lmax)/lead - 1|
  bool monotone_trend = true;      // |ratio - lead| non-increasing along the range
  double C3 = 0.0;                 // smallest C3 with dim T_l <= cum_lead*l^{2d-1} + C3*l^{2d-2}
  long cum_lower_violations = 0;   // levels with dim T_l < cum_lead*l^{2d-1}
  // Pointwise lower bound (m+n)(mn)^{d-2}/((d-1)!(d-2)!) <= d_{m,n} and the
  // matching upper constant; only meaningful for d >= 3 and mn > 0.
  bool bidegree_bound_skipped = false;
  std::string skip_reason;
  long bidegree_lower_violations = 0;
  double bidegree_upper_C = 0.0;
  long bidegree_pairs_checked = 0;
  long bidegree_pairs_skipped = 0;
};

DimBoundsReport check_dim_bounds(int d, int lmin, int lmax);

} // namespace cxw::harmonic_dims
