#pragma once

#include "cxwidths/multipliers.hpp"
#include "cxwidths/real_basis.hpp"
#include "cxwidths/sphere_mc.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cxw::levy {

using sphere_mc::McEstimate;

struct LevyProblem {
  int d = 2;
  int M1 = 0;
  int M2 = 1;
  multipliers::MultiplierFamily fam;
  double p = 2.0;  // +inf allowed
  std::size_t s = 0;
  std::shared_ptr<const RealCoordinateSystem> basis;
  std::vector<double> lambdas;  // multiplier of each coordinate function
};

/// Window levels M1 < l <= M2 under the family's grading; M1 = -1 includes constants.
LevyProblem make_levy_problem(int d, int M1, int M2, const multipliers::MultiplierFamily& fam, double p);

/// (s^{-1} sum_k lambda_k^2)^{1/2}: the exact Levy mean for p = 2.
double levy_mean_parseval(const LevyProblem& prob);

/// RMS of ||Lambda_s J(x)||_p over uniform x on S^{s-1}.
/// p = 2 with omega_samples = 0 returns the Parseval value.
/// Otherwise the inner norm uses one shared cloud of omega_samples points;
/// std_error combines the outer sample variance with a delete-a-group
/// jackknife over the cloud.
McEstimate levy_mean_mc(const LevyProblem& prob, std::size_t sphere_samples, std::size_t omega_samples,
                        std::uint64_t seed, std::size_t chunk = sphere_mc::kDefaultChunk);

enum class LevyCase { a, b, c, d };
std::string to_string(LevyCase c);

struct LevyBounds {
  LevyCase which = LevyCase::d;
  std::size_t s = 0;
  double lower = 0.0;
  std::optional<double> upper;  // empty for (a), (b): unknown absolute constant
  double structural_factor = 0.0;  // upper bound without the constant C
  double sum_lower = 0.0;  // sum lambda(l)^2 d_l
  double sum_upper = 0.0;  // sum lambda(l-1)^2 d_l
  bool permuted = false;      // lambda non-decreasing on the window
  bool monotone = true;
  bool inconsistent = false;  // lower > upper
};

LevyBounds levy_bounds(const LevyProblem& prob);

struct NikolskiiRatios {
  double sup_norm = 0.0;
  double p_norm = 0.0;
  double p_norm_se = 0.0;
  double two_norm = 0.0;
  double sup_ratio = 0.0;  // ||t||_inf / ((s/omega)^{1/p} ||t||_p)
  double sup_ratio_se = 0.0;
  double p_ratio = 0.0;    // ||t||_p / ((s/omega)^{1/2-1/p} ||t||_2)
  double p_ratio_se = 0.0;
};

/// Both ratios for t = sum coeffs[k] xi_k.
NikolskiiRatios nikolskii_ratios(const RealCoordinateSystem& basis, std::span<const double> coeffs, double p,
                                 std::size_t omega_samples, std::uint64_t seed,
                                 std::size_t chunk = sphere_mc::kDefaultChunk);

struct NikolskiiReport {
  std::size_t trials = 0;
  std::size_t s = 0;
  long sup_violations = 0;
  long p_violations = 0;
  double worst_sup_ratio = 0.0;
  double worst_p_ratio = 0.0;
  std::uint64_t seed = 0;
};

NikolskiiReport nikolskii_check(int d, int M1, int M2, double p, std::size_t trials, std::uint64_t seed,
                                std::size_t omega_samples = 20000, std::size_t chunk = sphere_mc::kDefaultChunk);

} // namespace cxw::levy
