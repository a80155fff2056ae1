#include "cxwidths/levy.hpp"

#include "cxwidths/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace cxw::levy {

namespace {

constexpr int kJackknifeGroups = 20;

Eigen::MatrixXd cloud_matrix(const RealCoordinateSystem& basis, const std::vector<sphere_mc::SpherePoint>& pts) {
  Eigen::MatrixXd B(static_cast<Eigen::Index>(pts.size()), static_cast<Eigen::Index>(basis.size()));
  std::vector<double> row(basis.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    basis.eval_all(pts[i].coords(), row);
    for (std::size_t k = 0; k < row.size(); ++k) B(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = row[k];
  }
  return B;
}

void check_p(double p) {
  if (!(p >= 1.0)) throw ArgumentError("p must be >= 1 or inf");
}

} // namespace

std::string to_string(LevyCase c) {
  switch (c) {
    case LevyCase::a: return "a";
    case LevyCase::b: return "b";
    case LevyCase::c: return "c";
    case LevyCase::d: return "d";
  }
  return "?";
}

LevyProblem make_levy_problem(int d, int M1, int M2, const multipliers::MultiplierFamily& fam, double p) {
  check_p(p);
  LevyProblem prob;
  prob.d = d;
  prob.M1 = M1;
  prob.M2 = M2;
  prob.fam = fam;
  prob.p = p;
  try {
    prob.basis = std::make_shared<const RealCoordinateSystem>(d, M1, M2, fam.grading);
  } catch (const ArgumentError& e) {
    throw ArgumentError(std::string("infeasible Levy window: ") + e.what());
  }
  prob.s = prob.basis->size();
  for (const auto& f : prob.basis->functions()) prob.lambdas.push_back(multipliers::multiplier_at(fam, f.bidegree));
  return prob;
}

double levy_mean_parseval(const LevyProblem& prob) {
  double s = 0.0;
  for (double l : prob.lambdas) s += l * l;
  return std::sqrt(s / static_cast<double>(prob.s));
}

McEstimate levy_mean_mc(const LevyProblem& prob, std::size_t sphere_samples, std::size_t omega_samples,
                        std::uint64_t seed, std::size_t chunk) {
  if (sphere_samples < 2) throw ArgumentError("levy_mean_mc: need at least 2 sphere samples");
  McEstimate est;
  est.seed = seed;
  est.samples = sphere_samples;
  if (omega_samples == 0) {
    if (prob.p != 2.0) throw ArgumentError("levy_mean_mc: omega_samples = 0 only allowed for p = 2");
    est.value = levy_mean_parseval(prob);
    return est;
  }
  if (omega_samples < 1000) throw ArgumentError("levy_mean_mc: omega_samples must be >= 1000");

  const double w = sphere_mc::omega_d(prob.d);
  const auto pts = sphere_mc::sample_omega(prob.d, omega_samples, seed, chunk, 1);
  Eigen::MatrixXd B = cloud_matrix(*prob.basis, pts);
  for (Eigen::Index k = 0; k < B.cols(); ++k) B.col(k) *= prob.lambdas[static_cast<std::size_t>(k)];

  const auto xs = sphere_mc::sample_real_sphere(static_cast<int>(prob.s), sphere_samples, seed, 2, chunk);
  const std::size_t N = omega_samples;
  const int G = kJackknifeGroups;
  std::vector<std::size_t> group_size(G, 0);
  for (std::size_t i = 0; i < N; ++i) ++group_size[i * G / N];

  const bool inf = std::isinf(prob.p);
  const double p = prob.p;
  // per outer sample: group partial sums of |f|^p (or group maxima)
  std::vector<double> parts(sphere_samples * G, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(sphere_samples); ++k) {
    const Eigen::Map<const Eigen::VectorXd> x(xs.data() + static_cast<std::size_t>(k) * prob.s,
                                              static_cast<Eigen::Index>(prob.s));
    const Eigen::VectorXd f = B * x;
    double* out = parts.data() + static_cast<std::size_t>(k) * G;
    for (std::size_t i = 0; i < N; ++i) {
      const double a = std::abs(f[static_cast<Eigen::Index>(i)]);
      const std::size_t g = i * G / N;
      if (inf) {
        out[g] = std::max(out[g], a);
      } else {
        out[g] += p == 2.0 ? a * a : std::pow(a, p);
      }
    }
  }

  // squared norm of outer sample k with group `skip` left out (skip = -1 keeps all)
  auto sq_norm = [&](std::size_t k, int skip) {
    const double* v = parts.data() + k * G;
    if (inf) {
      double m = 0.0;
      for (int g = 0; g < G; ++g) {
        if (g != skip) m = std::max(m, v[g]);
      }
      return m * m;
    }
    double s = 0.0;
    std::size_t n = 0;
    for (int g = 0; g < G; ++g) {
      if (g == skip) continue;
      s += v[g];
      n += group_size[static_cast<std::size_t>(g)];
    }
    return std::pow(w * s / static_cast<double>(n), 2.0 / p);
  };

  std::vector<double> sq(sphere_samples);
  double mean = 0.0;
  for (std::size_t k = 0; k < sphere_samples; ++k) {
    sq[k] = sq_norm(k, -1);
    mean += sq[k];
  }
  mean /= static_cast<double>(sphere_samples);
  double var = 0.0;
  for (double v : sq) var += (v - mean) * (v - mean);
  var /= static_cast<double>(sphere_samples - 1);
  est.value = std::sqrt(mean);
  const double outer_se = est.value > 0.0 ? std::sqrt(var / static_cast<double>(sphere_samples)) / (2.0 * est.value) : 0.0;

  std::vector<double> loo(G);
  double loo_mean = 0.0;
  for (int g = 0; g < G; ++g) {
    double m = 0.0;
    for (std::size_t k = 0; k < sphere_samples; ++k) m += sq_norm(k, g);
    loo[static_cast<std::size_t>(g)] = std::sqrt(m / static_cast<double>(sphere_samples));
    loo_mean += loo[static_cast<std::size_t>(g)];
  }
  loo_mean /= G;
  double jk = 0.0;
  for (double v : loo) jk += (v - loo_mean) * (v - loo_mean);
  jk *= static_cast<double>(G - 1) / G;

  est.std_error = std::sqrt(outer_se * outer_se + jk);
  est.lower_bias = inf;
  return est;
}

LevyBounds levy_bounds(const LevyProblem& prob) {
  if (prob.M1 < 0) throw ArgumentError("levy_bounds: M1 must be >= 0 (lambda(l-1) is evaluated)");
  LevyBounds b;
  b.s = prob.s;
  const auto& fam = prob.fam;
  const Grading g = fam.grading;
  std::vector<double> lam;
  for (int l = prob.M1; l <= prob.M2; ++l) lam.push_back(multipliers::lambda_value(fam, l));
  bool nonincreasing = true, nondecreasing = true;
  for (std::size_t i = 1; i < lam.size(); ++i) {
    if (lam[i] > lam[i - 1]) nonincreasing = false;
    if (lam[i] < lam[i - 1]) nondecreasing = false;
  }
  b.monotone = nonincreasing || nondecreasing;
  b.permuted = !nonincreasing && nondecreasing;
  for (int l = prob.M1 + 1; l <= prob.M2; ++l) {
    const double dl = harmonic_dims::layer_dim(prob.d, l, g).convert_to<double>();
    const double cur = lam[static_cast<std::size_t>(l - prob.M1)];
    const double prev = lam[static_cast<std::size_t>(l - 1 - prob.M1)];
    const double lo = b.permuted ? prev : cur;
    const double hi = b.permuted ? cur : prev;
    b.sum_lower += lo * lo * dl;
    b.sum_upper += hi * hi * dl;
  }
  const double s = static_cast<double>(prob.s);
  const double w = sphere_mc::omega_d(prob.d);
  const double base_lower = std::sqrt(b.sum_lower / s);
  const double base_upper = std::sqrt(b.sum_upper / s);
  const double p = prob.p;
  if (p == 2.0) {
    b.which = LevyCase::d;
    b.lower = base_lower;
    b.upper = base_upper;
    b.structural_factor = base_upper;
  } else if (p < 2.0) {
    b.which = LevyCase::c;
    b.lower = std::sqrt(w) / 2.0 * base_lower;
    b.upper = base_upper;
    b.structural_factor = base_upper;
  } else if (std::isinf(p)) {
    b.which = LevyCase::b;
    b.lower = base_lower;
    b.structural_factor = std::pow(w, -0.5) * std::sqrt(std::log(s)) * base_upper;
  } else {
    b.which = LevyCase::a;
    b.lower = base_lower;
    b.structural_factor = std::pow(w, 1.0 / p - 0.5) * std::sqrt(p) * base_upper;
  }
  b.inconsistent = b.upper && b.lower > *b.upper;
  return b;
}

namespace {

struct Cloud {
  std::vector<sphere_mc::SpherePoint> pts;
  Eigen::MatrixXd B;
};

Cloud make_cloud(const RealCoordinateSystem& basis, std::size_t n, std::uint64_t seed, std::size_t chunk) {
  Cloud c;
  c.pts = sphere_mc::sample_omega(basis.d(), n, seed, chunk, 1);
  c.B = cloud_matrix(basis, c.pts);
  return c;
}

NikolskiiRatios ratios_on_cloud(const RealCoordinateSystem& basis, const Cloud& cloud,
                                std::span<const double> coeffs, double p, std::uint64_t seed) {
  check_p(p);
  if (coeffs.size() != basis.size()) throw ArgumentError("nikolskii: coefficient count differs from s");
  const Eigen::Map<const Eigen::VectorXd> a(coeffs.data(), static_cast<Eigen::Index>(coeffs.size()));
  const Eigen::VectorXd f = cloud.B * a;
  const double s = static_cast<double>(basis.size());
  const double w = sphere_mc::omega_d(basis.d());
  NikolskiiRatios r;
  r.two_norm = a.norm();

  Eigen::Index arg = 0;
  f.cwiseAbs().maxCoeff(&arg);
  // shrinking-cap search around the best cloud point
  std::vector<double> vals(basis.size());
  auto value_at = [&](std::span<const std::complex<double>> z) {
    basis.eval_all(z, vals);
    double v = 0.0;
    for (std::size_t k = 0; k < vals.size(); ++k) v += coeffs[k] * vals[k];
    return std::abs(v);
  };
  std::vector<std::complex<double>> best = cloud.pts[static_cast<std::size_t>(arg)].coords();
  double best_val = std::abs(f[arg]);
  std::mt19937_64 gen(sphere_mc::derive_seed(seed, 0x5c0fULL, 1));
  std::normal_distribution<double> g(0.0, 1.0);
  double radius = 0.2;
  for (int round = 0; round < 30; ++round) {
    bool improved = false;
    for (int c = 0; c < 32; ++c) {
      std::vector<std::complex<double>> z(best.size());
      double n2 = 0.0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        z[j] = best[j] + radius * std::complex<double>(g(gen), g(gen));
        n2 += std::norm(z[j]);
      }
      for (auto& v : z) v /= std::sqrt(n2);
      const double v = value_at(z);
      if (v > best_val) {
        best_val = v;
        best = std::move(z);
        improved = true;
      }
    }
    if (!improved) radius *= 0.5;
  }
  r.sup_norm = best_val;

  if (p == 2.0) {
    r.p_norm = r.two_norm;
  } else if (std::isinf(p)) {
    r.p_norm = r.sup_norm;
  } else {
    std::vector<double> absf(static_cast<std::size_t>(f.size()));
    for (Eigen::Index i = 0; i < f.size(); ++i) absf[static_cast<std::size_t>(i)] = std::abs(f[i]);
    const auto e = sphere_mc::mc_lp_norm(absf, p, basis.d());
    r.p_norm = e.value;
    r.p_norm_se = e.std_error;
  }
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  const double k1 = std::pow(s / w, inv_p);
  const double k2 = std::pow(s / w, 0.5 - inv_p);
  r.sup_ratio = r.sup_norm / (k1 * r.p_norm);
  r.sup_ratio_se = r.p_norm > 0.0 ? r.sup_ratio * r.p_norm_se / r.p_norm : 0.0;
  r.p_ratio = r.p_norm / (k2 * r.two_norm);
  r.p_ratio_se = r.p_norm_se / (k2 * r.two_norm);
  return r;
}

} // namespace

NikolskiiRatios nikolskii_ratios(const RealCoordinateSystem& basis, std::span<const double> coeffs, double p,
                                 std::size_t omega_samples, std::uint64_t seed, std::size_t chunk) {
  const Cloud cloud = make_cloud(basis, omega_samples, seed, chunk);
  return ratios_on_cloud(basis, cloud, coeffs, p, seed);
}

NikolskiiReport nikolskii_check(int d, int M1, int M2, double p, std::size_t trials, std::uint64_t seed,
                                std::size_t omega_samples, std::size_t chunk) {
  check_p(p);
  if (trials < 1) throw ArgumentError("nikolskii: trials must be >= 1");
  const RealCoordinateSystem basis(d, M1, M2, Grading::max);
  const Cloud cloud = make_cloud(basis, omega_samples, seed, chunk);
  const auto coeffs = sphere_mc::sample_real_sphere(static_cast<int>(basis.size()), trials, seed, 3, chunk);
  NikolskiiReport rep;
  rep.trials = trials;
  rep.s = basis.size();
  rep.seed = seed;
  std::vector<NikolskiiRatios> rs(trials);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(trials); ++t) {
    const std::span<const double> a(coeffs.data() + static_cast<std::size_t>(t) * basis.size(), basis.size());
    rs[static_cast<std::size_t>(t)] = ratios_on_cloud(basis, cloud, a, p, seed + static_cast<std::uint64_t>(t));
  }
  for (const auto& r : rs) {
    if (r.sup_ratio > 1.0 + 3.0 * r.sup_ratio_se) ++rep.sup_violations;
    if (r.p_ratio > 1.0 + 3.0 * r.p_ratio_se) ++rep.p_violations;
    rep.worst_sup_ratio = std::max(rep.worst_sup_ratio, r.sup_ratio);
    rep.worst_p_ratio = std::max(rep.worst_p_ratio, r.p_ratio);
  }
  return rep;
}

} // namespace cxw::levy
