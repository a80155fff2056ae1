#include "cxwidths/widths.hpp"

#include "cxwidths/errors.hpp"

#include <Eigen/Dense>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace cxw::widths {

using multipliers::Kind;

WidthTable WidthTable::from_values(std::vector<double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0) throw DataError(fmt::format("width table: bad value at n={}", i));
    if (i > 0 && values[i] > values[i - 1]) throw DataError(fmt::format("width table: increases at n={}", i));
  }
  WidthTable t;
  t.values = std::move(values);
  return t;
}

std::vector<std::pair<double, Count>> multiplier_spectrum(const MultiplierFamily& fam, int d, int lmax) {
  std::vector<std::pair<double, Count>> out;
  for (int l = 0; l <= lmax; ++l) {
    out.emplace_back(std::abs(multipliers::lambda_value(fam, l)), harmonic_dims::layer_dim(d, l, fam.grading));
  }
  return out;
}

WidthTable width_table_from_spectrum(std::vector<std::pair<double, Count>> spectrum, std::size_t n_max) {
  std::stable_sort(spectrum.begin(), spectrum.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  WidthTable t;
  const std::size_t want = n_max + 1;
  for (const auto& [v, mult] : spectrum) {
    if (t.values.size() >= want) break;
    if (v == 0.0) {
      t.zero_tail = true;
      break;
    }
    const Count room = Count(static_cast<long long>(want - t.values.size()));
    const auto take = static_cast<std::size_t>(std::min(mult, room).convert_to<long long>());
    t.values.insert(t.values.end(), take, v);
  }
  return t;
}

WidthTable l2_width_table(const MultiplierFamily& fam, int d, std::size_t n_max) {
  if (n_max < 1) throw ArgumentError("width table: n_max must be >= 1");
  WidthTable t;
  if (fam.kind == Kind::identity) {
    t.values.assign(n_max + 1, 1.0);
    t.non_compact = true;
    t.warning = "non-compact: constant table";
  } else {
    int lmax = 0;
    while (harmonic_dims::dim_T(d, lmax, fam.grading) <= Count(static_cast<long long>(n_max))) {
      if (lmax >= kMaxWidthLevel) break;
      ++lmax;
    }
    const bool capped = harmonic_dims::dim_T(d, lmax, fam.grading) <= Count(static_cast<long long>(n_max));
    t = width_table_from_spectrum(multiplier_spectrum(fam, d, lmax), n_max);
    t.level_cap_hit = capped;
    if (capped) t.warning = fmt::format("level guard {} reached before n_max", kMaxWidthLevel);
  }
  t.fam = fam;
  t.d = d;
  return t;
}

std::string to_string(Model m) {
  switch (m) {
    case Model::power: return "power";
    case Model::power_log: return "power_log";
    case Model::stretched: return "stretched";
  }
  return "?";
}

Model parse_model(const std::string& s) {
  if (s == "power") return Model::power;
  if (s == "power_log") return Model::power_log;
  if (s == "stretched") return Model::stretched;
  throw ArgumentError("unknown fit model '" + s + "'");
}

namespace {

constexpr std::size_t kMinRangePoints = 20;

// plateau left endpoints inside [lo, hi]
std::vector<std::size_t> fit_indices(const WidthTable& t, FitRange& range, std::size_t min_index) {
  if (t.values.empty()) throw RangeError("fit: empty table");
  if (range.hi == 0) range.hi = t.values.size() - 1;
  if (range.lo < min_index) range.lo = min_index;
  if (range.hi >= t.values.size() || range.lo > range.hi) {
    throw RangeError(fmt::format("fit: range [{}, {}] outside table of {} entries", range.lo, range.hi, t.values.size()));
  }
  if (range.hi - range.lo + 1 < kMinRangePoints) throw RangeError("fit: fewer than 20 points in range");
  std::vector<std::size_t> idx;
  for (std::size_t n = range.lo; n <= range.hi; ++n) {
    if (!(t.values[n] > 0.0)) throw RangeError(fmt::format("fit: zero width at n={}", n));
    if (n == range.lo || t.values[n] != t.values[n - 1]) idx.push_back(n);
  }
  return idx;
}

struct Lsq {
  Eigen::VectorXd coef;
  double rms = 0.0;
};

Lsq least_squares(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  Lsq out;
  out.coef = X.colPivHouseholderQr().solve(y);
  const Eigen::VectorXd res = y - X * out.coef;
  out.rms = std::sqrt(res.squaredNorm() / static_cast<double>(y.size()));
  return out;
}

} // namespace

FitResult fit_power(const WidthTable& t, FitRange range, bool with_log_factor) {
  const auto idx = fit_indices(t, range, with_log_factor ? 3 : 1);
  const std::size_t need = with_log_factor ? 3 : 2;
  if (idx.size() < need) throw RangeError("fit: too few distinct plateaus in range");
  const auto k = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd X(k, with_log_factor ? 3 : 2);
  Eigen::VectorXd y(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const double n = static_cast<double>(idx[static_cast<std::size_t>(i)]);
    X(i, 0) = 1.0;
    X(i, 1) = std::log(n);
    if (with_log_factor) X(i, 2) = std::log(std::log(n));
    y(i) = std::log(t.values[idx[static_cast<std::size_t>(i)]]);
  }
  const auto fit = least_squares(X, y);
  FitResult r;
  r.model = with_log_factor ? Model::power_log : Model::power;
  r.intercept = fit.coef(0);
  r.slope = fit.coef(1);
  if (with_log_factor) r.log_coef = fit.coef(2);
  r.lo = range.lo;
  r.hi = range.hi;
  r.points = idx.size();
  r.residual_rms = fit.rms;
  return r;
}

FitResult fit_stretched(const WidthTable& t, int d, double r, FitRange range) {
  if (d < 2) throw ArgumentError("fit_stretched: d must be >= 2");
  if (!(r > 0.0)) throw ArgumentError("fit_stretched: r must be > 0");
  const auto idx = fit_indices(t, range, 0);
  if (idx.size() < 2) throw RangeError("fit: too few distinct plateaus in range");
  const double e = r / (2.0 * d - 1.0);
  const auto k = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd X(k, 2);
  Eigen::VectorXd y(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const double n = static_cast<double>(idx[static_cast<std::size_t>(i)]);
    X(i, 0) = 1.0;
    X(i, 1) = std::pow(n, e);
    y(i) = std::log(t.values[idx[static_cast<std::size_t>(i)]]);
  }
  const auto fit = least_squares(X, y);
  FitResult out;
  out.model = Model::stretched;
  out.intercept = fit.coef(0);
  out.slope = fit.coef(1);
  out.exponent = e;
  out.lo = range.lo;
  out.hi = range.hi;
  out.points = idx.size();
  out.residual_rms = fit.rms;
  return out;
}

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

double pos(double x) { return x > 0.0 ? x : 0.0; }
double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

void hyp(bool ok, const std::string& what) {
  if (!ok) throw HypothesisError("hypothesis violated: " + what);
}

// q^{1/2} for q < inf, (ln m)^{1/2} for q = inf
double q_factor(double q, double m) { return std::isinf(q) ? std::sqrt(std::log(m)) : std::sqrt(q); }

} // namespace

double log_selector(double p, double q, double m) {
  const bool p12 = p >= 1.0 && p <= 2.0;
  if (p12 && q > 1.0 && q <= 2.0) return 1.0;
  if (p >= 2.0 && !std::isinf(p) && q >= 2.0) return 1.0;
  if (p12 && q >= 2.0) return 1.0;
  if (p12 && q == 1.0) return 1.0 / std::sqrt(std::log(m));
  if (std::isinf(p) && q >= 2.0) return 1.0 / std::sqrt(std::log(m));
  throw HypothesisError(fmt::format("hypothesis violated: no kappa/vartheta case for p={}, q={}", p, q));
}

double constant_R(int d, double gamma, double r) {
  return gamma * std::pow(factorial(d) * factorial(d - 1) / 2.0, r / (2.0 * d - 1.0));
}

double constant_R_star(int d, double gamma, double r) {
  return gamma * std::pow(factorial(2 * d - 1) / 2.0, r / (2.0 * d - 1.0));
}

std::vector<std::string> bound_ids() {
  return {"sobolev-a", "sobolev-b", "sobolev-c",     "sobolev-d", "sobolev-e", "sobolev-f",
          "sobolev-g", "sobolev-h", "sobolev-i",     "fs-upper",  "fs-lower-star", "fs-lower",
          "exp-lower", "exp-upper", "exp-star"};
}

BoundValue bound_eval(const BoundSpec& s, double m) {
  if (s.d < 2) throw ArgumentError("bound_eval: d must be >= 2");
  if (!(m >= 2.0)) throw ArgumentError("bound_eval: width index must be >= 2");
  if (!(s.p >= 1.0) || !(s.q >= 1.0)) throw ArgumentError("bound_eval: p, q must be >= 1");
  hyp(s.gamma > 0.0, "gamma > 0");
  const double D = 2.0 * s.d - 1.0;
  const double g = s.gamma / D;
  const double p = s.p, q = s.q, ip = inv(p), iq = inv(q);
  const double lm = std::log(m);
  const double base = std::pow(m, -g);
  const bool pinf = std::isinf(p), qinf = std::isinf(q);
  BoundValue v;
  const std::string& id = s.theorem;

  if (id.rfind("sobolev-", 0) == 0 && id.size() == 9) {
    const char c = id[8];
    const bool pq_equal = p == q;
    switch (c) {
      case 'a':
        hyp(pq_equal || (2.0 <= q && q <= p && !pinf), "1 <= p = q <= inf or 2 <= q <= p < inf");
        v.lower = v.upper = base;
        break;
      case 'b':
        hyp(pq_equal || (2.0 <= q && q <= p), "1 <= p = q <= inf or 2 <= q <= p <= inf");
        v.lower = base / std::sqrt(lm);
        v.upper = base;
        break;
      case 'c':
        hyp(2.0 <= q && q <= p && !pinf, "2 <= q <= p < inf");
        hyp(g > 0.5, "gamma/(2d-1) > 1/2");
        v.lower = v.upper = base;
        break;
      case 'd':
        hyp(2.0 <= q && q <= p, "2 <= q <= p <= inf");
        hyp(g > 0.5, "gamma/(2d-1) > 1/2");
        v.lower = base;
        v.upper = base * std::sqrt(lm);
        break;
      case 'e':
        hyp(p <= q && q <= 2.0, "1 <= p <= q <= 2");
        hyp(g > ip - iq, "gamma/(2d-1) > 1/p - 1/q");
        v.lower = v.upper = base * std::pow(m, ip - iq);
        break;
      case 'f':
        hyp(p <= q && q <= 2.0, "1 <= p <= q <= 2");
        v.lower = v.upper = base;
        break;
      case 'g':
        hyp(p <= q && q <= 2.0, "1 <= p <= q <= 2");
        v.lower = base / std::sqrt(lm);
        v.upper = base;
        break;
      case 'h':
        hyp(p <= 2.0 && 2.0 <= q && !qinf, "1 <= p <= 2 <= q < inf");
        hyp(g > ip, "gamma/(2d-1) > 1/p");
        v.lower = v.upper = base * std::pow(m, ip - 0.5);
        break;
      case 'i':
        hyp(p <= 2.0 && 2.0 <= q, "1 <= p <= 2 <= q <= inf");
        hyp(g > ip, "gamma/(2d-1) > 1/p");
        v.lower = base * std::pow(m, ip - 0.5);
        v.upper = *v.lower * std::sqrt(lm);
        break;
      default:
        throw ArgumentError("unknown bound id '" + id + "'");
    }
    v.note = "Sobolev class, both sides up to absolute constants";
    return v;
  }

  const double logxi = std::pow(lm, -s.xi);
  if (id == "fs-upper") {
    hyp(s.xi >= 0.0, "xi >= 0");
    hyp(q >= 2.0, "2 <= q <= inf");
    if (p <= 2.0) {
      hyp(s.gamma > D / p, "gamma > (2d-1)/p for 1 <= p <= 2");
    } else {
      hyp(s.gamma > D / 2.0, "gamma > (2d-1)/2 for p >= 2");
    }
    v.upper = std::pow(m, -g + pos(ip - 0.5)) * logxi * q_factor(q, m);
    v.note = qinf ? "(ln m)^{1/2} factor for q = inf" : "q^{1/2} factor";
    return v;
  }
  if (id == "fs-lower-star") {
    hyp(s.xi >= 0.0, "xi >= 0");
    hyp(g > ip - iq, "gamma/(2d-1) > 1/p - 1/q");
    v.lower = base * logxi * log_selector(p, q, m);
    v.note = "star grading, vartheta selector";
    return v;
  }
  if (id == "fs-lower") {
    hyp(s.xi >= 0.0, "xi >= 0");
    hyp(s.gamma > D / 2.0, "gamma > (2d-1)/2");
    v.lower = base * logxi * log_selector(p, q, m);
    v.note = "kappa selector";
    return v;
  }
  if (id == "exp-lower") {
    hyp(s.r > 0.0, "r > 0");
    const double R = constant_R(s.d, s.gamma, s.r);
    v.constant = R;
    if (s.r <= D) {
      v.lower = std::exp(-R * std::pow(m, s.r / D)) * log_selector(p, q, m);
      v.note = "lower bound at width index [psi_k] with psi_k = m";
    } else {
      v.note = "r > 2d-1: only the constant is reported";
    }
    return v;
  }
  if (id == "exp-upper") {
    hyp(s.r > 0.0, "r > 0");
    hyp(q >= 2.0, "2 <= q <= inf");
    const double R = constant_R(s.d, s.gamma, s.r);
    v.constant = R;
    if (s.r <= 1.0) {
      v.upper = std::exp(-R * std::pow(m, s.r / D)) * std::pow(m, (1.0 - s.r / D) * pos(ip - 0.5)) *
                (qinf ? std::sqrt(lm) : 1.0);
      v.note = "0 < r <= 1";
    } else {
      const double k = m;
      double expo = 0.0;
      if (p <= 2.0) {
        expo = (D - 1.0) * (ip - iq);
      } else {
        expo = (D - 1.0) * (0.5 - iq);
      }
      v.upper = std::exp(-s.gamma * std::pow(k, s.r)) * std::pow(k, expo);
      v.note = "r > 1: m is the level k, bound holds at width index phi_k = dim T_k";
    }
    return v;
  }
  if (id == "exp-star") {
    hyp(s.r > 0.0 && s.r <= 1.0, "0 < r <= 1");
    const double Rs = constant_R_star(s.d, s.gamma, s.r);
    v.constant = Rs;
    v.lower = std::exp(-Rs * std::pow(m, s.r / D)) * log_selector(p, q, m);
    if (q >= 2.0) {
      v.upper = std::exp(-Rs * std::pow(m, s.r / D)) * std::pow(m, (1.0 - s.r / D) * pos(ip - 0.5)) * q_factor(q, m);
    }
    v.note = "star grading";
    return v;
  }
  throw ArgumentError("unknown bound id '" + id + "'");
}

GradingReport grading_compare(const MultiplierFamily& fam, int d, std::size_t n_max, FitRange range) {
  GradingReport rep;
  if (fam.kind == Kind::identity) {
    rep.model = "none";
    rep.non_compact = true;
    rep.note = "non-compact, no rates";
    return rep;
  }
  const auto ts = l2_width_table(fam.with_grading(Grading::star), d, n_max);
  const auto tm = l2_width_table(fam.with_grading(Grading::max), d, n_max);
  if (fam.kind == Kind::exp_analytic) {
    rep.model = "stretched";
    rep.fit_star = fit_stretched(ts, d, fam.r, range);
    rep.fit_max = fit_stretched(tm, d, fam.r, range);
    rep.expected_ratio = constant_R_star(d, fam.gamma, fam.r) / constant_R(d, fam.gamma, fam.r);
  } else if (fam.kind == Kind::finite_smooth || fam.kind == Kind::sobolev) {
    rep.model = "power";
    rep.fit_star = fit_power(ts, range, false);
    rep.fit_max = fit_power(tm, range, false);
    rep.expected_ratio = 1.0;
  } else {
    throw ArgumentError("grading_compare: no rate model for table families");
  }
  rep.slope_star = rep.fit_star.slope;
  rep.slope_max = rep.fit_max.slope;
  rep.ratio = rep.slope_star / rep.slope_max;
  if (rep.model == "power") {
    rep.agree = std::abs(rep.slope_star - rep.slope_max) <= 0.05;
    rep.note = rep.agree ? "slopes agree" : "slopes differ";
  } else {
    rep.agree = std::abs(rep.ratio / rep.expected_ratio - 1.0) <= 0.03;
    rep.note = rep.agree ? "slope ratio matches R*/R" : "slope ratio differs from R*/R";
  }
  return rep;
}

} // namespace cxw::widths
