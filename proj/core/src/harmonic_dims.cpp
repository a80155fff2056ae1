#include "cxwidths/harmonic_dims.hpp"

#include "cxwidths/errors.hpp"

#include <algorithm>
#include <cmath>

namespace cxw {

std::string to_string(Grading g) { return g == Grading::star ? "star" : "max"; }

Grading parse_grading(const std::string& s) {
  if (s == "star") return Grading::star;
  if (s == "max") return Grading::max;
  throw ArgumentError("unknown grading '" + s + "' (expected star or max)");
}

int level_of(BiDegree b, Grading g) {
  return g == Grading::star ? b.m + b.n : std::max(b.m, b.n);
}

} // namespace cxw

namespace cxw::harmonic_dims {

Count binom(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  if (n >= 0) k = std::min(k, n - k);
  Count r = 1;
  for (long j = 1; j <= k; ++j) {
    r *= (n - k + j);
    r /= j;
  }
  return r;
}

Count dim_complex_harmonic(int d, BiDegree b) {
  if (d < 2) throw ArgumentError("dim_complex_harmonic: d must be >= 2");
  if (b.m < 0 || b.n < 0) throw ArgumentError("dim_complex_harmonic: negative bidegree");
  return binom(b.m + d - 1, b.m) * binom(b.n + d - 1, b.n) -
         binom(b.m + d - 2, b.m - 1) * binom(b.n + d - 2, b.n - 1);
}

Count dim_real_harmonic(int D, int k) {
  if (D < 3) throw ArgumentError("dim_real_harmonic: D must be >= 3");
  if (k < 0) throw ArgumentError("dim_real_harmonic: negative degree");
  return binom(D + k - 1, k) - binom(D + k - 3, k - 2);
}

std::vector<BiDegree> layer_members(int l, Grading g) {
  if (l < 0) throw ArgumentError("layer: negative level");
  std::vector<BiDegree> out;
  if (g == Grading::star) {
    for (int m = 0; m <= l; ++m) out.push_back({m, l - m});
  } else {
    for (int m = 0; m < l; ++m) out.push_back({m, l});
    for (int n = 0; n <= l; ++n) out.push_back({l, n});
  }
  return out;
}

Count layer_dim(int d, int l, Grading g) {
  if (l < 0) throw ArgumentError("layer: negative level");
  return dim_T(d, l, g) - dim_T(d, l - 1, g);
}

std::vector<LayerSummary> layers(int d, int lmax, Grading g) {
  if (d < 2) throw ArgumentError("layer: d must be >= 2");
  if (lmax < 0) throw ArgumentError("layer: negative level");
  std::vector<LayerSummary> out;
  out.reserve(static_cast<std::size_t>(lmax) + 1);
  Count cum = 0;
  for (int l = 0; l <= lmax; ++l) {
    LayerSummary s;
    s.l = l;
    s.members = layer_members(l, g);
    s.a_l = static_cast<int>(s.members.size());
    for (const auto& b : s.members) s.d_l += dim_complex_harmonic(d, b);
    cum += s.d_l;
    s.cum_dim = cum;
    out.push_back(std::move(s));
  }
  return out;
}

LayerSummary layer(int d, int l, Grading g) {
  if (d < 2) throw ArgumentError("layer: d must be >= 2");
  if (l < 0) throw ArgumentError("layer: negative level");
  LayerSummary s;
  s.l = l;
  s.members = layer_members(l, g);
  s.a_l = static_cast<int>(s.members.size());
  for (const auto& b : s.members) s.d_l += dim_complex_harmonic(d, b);
  s.cum_dim = dim_T(d, l, g);
  return s;
}

Count dim_T(int d, int N, Grading g) {
  if (d < 2) throw ArgumentError("dim_T: d must be >= 2");
  if (N < 0) return 0;
  if (g == Grading::max) {
    // d_{m,n} = A(m)A(n) - A(m-1)A(n-1) with A(m) = binom(m+d-1, m) telescopes
    // over the square m,n <= N; sum_{m<=N} A(m) = binom(N+d, d)
    const Count s = binom(N + d, d);
    const Count t = binom(N - 1 + d, d);
    return s * s - t * t;
  }
  // harmonics of degree <= N on S^{2d-1}
  return binom(N + 2 * d - 1, N) + binom(N + 2 * d - 2, N - 1);
}

Count theta(int d, int a, int b, Grading g) {
  if (a < -1 || a >= b) throw ArgumentError("theta: need -1 <= a < b");
  return dim_T(d, b, g) - dim_T(d, a, g);
}

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

Count ipow(Count b, int e) {
  Count r = 1;
  for (int j = 0; j < e; ++j) r *= b;
  return r;
}

} // namespace

DimBoundsReport check_dim_bounds(int d, int lmin, int lmax) {
  if (d < 2) throw ArgumentError("check_dim_bounds: d must be >= 2");
  if (lmin < 1 || lmax < lmin) throw ArgumentError("check_dim_bounds: empty or invalid level range");
  DimBoundsReport rep;
  rep.d = d;
  rep.lmin = lmin;
  rep.lmax = lmax;
  rep.lead = 2.0 * (2 * d - 1) / (factorial(d) * factorial(d - 1));
  rep.cum_lead = 2.0 / (factorial(d) * factorial(d - 1));

  const auto ls = layers(d, lmax, Grading::max);
  double prev_gap = INFINITY;
  for (int l = lmin; l <= lmax; ++l) {
    const auto& s = ls[static_cast<std::size_t>(l)];
    const double dl = s.d_l.convert_to<double>();
    const double lead_term = rep.lead * std::pow(l, 2 * d - 2);
    const double scale = std::pow(l, 2 * d - 3);
    DimBoundRow row;
    row.l = l;
    row.d_l = s.d_l;
    row.ratio = dl / std::pow(l, 2 * d - 2);
    row.implied_C1 = (lead_term - dl) / scale;
    row.implied_C2 = (dl - lead_term) / scale;
    row.cum_ratio = s.cum_dim.convert_to<double>() / std::pow(l, 2 * d - 1);
    rep.C1 = std::max(rep.C1, row.implied_C1);
    rep.C2 = std::max(rep.C2, row.implied_C2);

    const double cum = s.cum_dim.convert_to<double>();
    const double cum_lead_term = rep.cum_lead * std::pow(l, 2 * d - 1);
    if (cum < cum_lead_term) ++rep.cum_lower_violations;
    rep.C3 = std::max(rep.C3, (cum - cum_lead_term) / std::pow(l, 2 * d - 2));

    const double gap = std::abs(row.ratio - rep.lead);
    if (gap > prev_gap) rep.monotone_trend = false;
    prev_gap = gap;
    rep.rows.push_back(row);
  }
  rep.final_ratio_error = std::abs(rep.rows.back().ratio / rep.lead - 1.0);

  if (d == 2) {
    rep.bidegree_bound_skipped = true;
    rep.skip_reason = "d=2: the bound carries (d-2)! and (mn)^{d-2}; no convention given";
    return rep;
  }
  const Count denom = Count(static_cast<long long>(factorial(d - 1) * factorial(d - 2)));
  for (int m = 0; m <= lmax; ++m) {
    for (int n = 0; n <= lmax; ++n) {
      if (std::max(m, n) < lmin) continue;
      if (m == 0 || n == 0) {
        ++rep.bidegree_pairs_skipped;
        continue;
      }
      ++rep.bidegree_pairs_checked;
      const Count dmn = dim_complex_harmonic(d, {m, n});
      const Count lhs_num = Count(m + n) * ipow(Count(m) * n, d - 2);
      if (dmn * denom < lhs_num) ++rep.bidegree_lower_violations;
      const double excess = dmn.convert_to<double>() - lhs_num.convert_to<double>() / denom.convert_to<double>();
      const double scale = (m + n) * std::pow(m, d - 2) * std::pow(n, d - 3);
      rep.bidegree_upper_C = std::max(rep.bidegree_upper_C, excess / scale);
    }
  }
  if (rep.bidegree_pairs_skipped > 0) rep.skip_reason = "pairs with mn=0 skipped";
  return rep;
}

} // namespace cxw::harmonic_dims
