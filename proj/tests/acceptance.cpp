// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "cxwidths/harmonic_basis.hpp"
#include "cxwidths/harmonic_dims.hpp"
#include "cxwidths/levy.hpp"
#include "cxwidths/multipliers.hpp"
#include "cxwidths/widths.hpp"
#include "support/oracles.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

using namespace cxw;
using multipliers::MultiplierFamily;

namespace {

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, std::string what) {
    if (!ok) pass = false;
    notes.push_back((ok ? "" : "!") + std::move(what));
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool report(int id, const std::string& title, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto t0 = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  std::string detail;
  for (const auto& n : v.notes) detail += (detail.empty() ? "" : "; ") + n;
  fmt::print("{} {}: {} ({:.1f}s) [{}]\n", v.pass ? "PASS" : "FAIL", id, title, seconds_since(t0), detail);
  std::fflush(stdout);
  return v.pass;
}

void exact_identities(Verdict& v) {
  auto t0 = Clock::now();
  bool ok = true;
  for (int d = 2; d <= 4; ++d) {
    for (int k = 0; k <= 50; ++k) {
      Count sum = 0;
      for (int m = 0; m <= k; ++m) sum += harmonic_dims::dim_complex_harmonic(d, {m, k - m});
      ok = ok && sum == harmonic_dims::dim_real_harmonic(2 * d, k);
    }
  }
  v.require(ok && seconds_since(t0) < 10, "transfer d=2..4 k<=50");
  t0 = Clock::now();
  ok = true;
  for (int N = 0; N <= 100; ++N) ok = ok && harmonic_dims::dim_T(2, N, Grading::max) == Count((N + 1) * (N + 1) * (N + 1));
  v.require(ok && seconds_since(t0) < 10, "dim T_N = (N+1)^3 N<=100");
  t0 = Clock::now();
  ok = true;
  for (int d = 2; d <= 3; ++d) {
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 4; ++n) {
        ok = ok && harmonic_dims::dim_complex_harmonic(d, {m, n}) == Count(oracle::laplacian_kernel_dim(d, m, n));
      }
    }
  }
  v.require(ok && seconds_since(t0) < 10, "d_{m,n} = Laplacian kernel rank, m,n<=4, d=2,3");
}

void addition(Verdict& v) {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int d = 2; d <= 3; ++d) {
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 4; ++n) {
        const auto r = harmonic_basis::verify_addition(d, {m, n}, 1000, 0);
        worst = std::max({worst, r.max_deviation, r.max_diag_deviation});
      }
    }
  }
  v.require(worst < 1e-9, fmt::format("max deviation {:.3g}", worst));
  v.require(seconds_since(t0) < 60, "runtime < 60s");
}

void gegenbauer(Verdict& v) {
  double worst = 0.0;
  for (int d = 2; d <= 3; ++d) {
    for (int k = 0; k <= 6; ++k) worst = std::max(worst, harmonic_basis::verify_gegenbauer(d, k, 1000, 0));
  }
  v.require(worst < 1e-9, fmt::format("max deviation {:.3g}", worst));
}

void power_rates(Verdict& v) {
  const auto t0 = Clock::now();
  const auto t = widths::l2_width_table(MultiplierFamily::finite_smooth(3, 0), 2, 1000000);
  const auto f = widths::fit_power(t, {1000, 1000000}, false);
  v.require(std::abs(f.slope + 1.0) <= 0.05, fmt::format("slope {:.4f}", f.slope));
  const auto t2 = widths::l2_width_table(MultiplierFamily::finite_smooth(3, 2), 2, 1000000);
  const auto f2 = widths::fit_power(t2, {1000, 1000000}, true);
  v.require(std::abs(-f2.log_coef - 2.0) <= 0.3, fmt::format("xi {:.3f}", -f2.log_coef));
  v.require(seconds_since(t0) < 60, "runtime < 60s");
}

void stretched_rates(Verdict& v) {
  const auto t0 = Clock::now();
  const auto exp_rep = widths::grading_compare(MultiplierFamily::exp_analytic(1, 1), 2, 1000000);
  v.require(std::abs(exp_rep.slope_max + 1.0) <= 0.02, fmt::format("max slope {:.4f}", exp_rep.slope_max));
  v.require(std::abs(exp_rep.slope_star + 1.4422) <= 0.03, fmt::format("star slope {:.4f}", exp_rep.slope_star));
  v.require(std::abs(exp_rep.ratio / std::cbrt(3.0) - 1.0) <= 0.03, fmt::format("ratio {:.4f}", exp_rep.ratio));
  const auto fs_rep = widths::grading_compare(MultiplierFamily::finite_smooth(3, 0), 2, 1000000);
  v.require(std::abs(fs_rep.slope_star - fs_rep.slope_max) <= 0.05,
            fmt::format("power slopes {:.4f} vs {:.4f}", fs_rep.slope_star, fs_rep.slope_max));
  v.require(seconds_since(t0) < 60, "runtime < 60s");
}

void levy_means(Verdict& v) {
  const auto t0 = Clock::now();
  const std::size_t outer = 1000, inner = 10000;
  const std::vector<std::pair<int, int>> windows = {{0, 1}, {1, 2}};
  std::uint64_t seed = 0;
  for (const auto& fam : {MultiplierFamily::identity(), MultiplierFamily::exp_analytic(1, 1)}) {
    for (const auto& [M1, M2] : windows) {
      const auto prob = levy::make_levy_problem(2, M1, M2, fam, 2.0);
      const auto est = levy::levy_mean_mc(prob, outer, inner, seed++);
      const double exact = levy::levy_mean_parseval(prob);
      v.require(std::abs(est.value - exact) <= 3.0 * est.std_error,
                fmt::format("parseval {} ({},{}) {:.5f} vs {:.5f}+-{:.1e}", fam.spec(), M1, M2, exact, est.value, est.std_error));
    }
  }
  for (const auto& fam : {MultiplierFamily::identity(), MultiplierFamily::sobolev(1, 2), MultiplierFamily::exp_analytic(1, 1)}) {
    for (const auto& [M1, M2] : windows) {
      for (double p : {2.0, 4.0, double(INFINITY)}) {
        const auto prob = levy::make_levy_problem(2, M1, M2, fam, p);
        const auto est = levy::levy_mean_mc(prob, outer, inner, seed++);
        const auto b = levy::levy_bounds(prob);
        const bool lower_ok = b.lower <= est.value + 3.0 * est.std_error;
        v.require(lower_ok, fmt::format("lower {} ({},{}) p={} {:.4f} <= {:.4f}+-{:.1e}", fam.spec(), M1, M2, p, b.lower,
                                        est.value, est.std_error));
        if (b.which == levy::LevyCase::d) {
          const bool upper_ok = b.upper && est.value <= *b.upper + 3.0 * est.std_error;
          v.require(upper_ok, fmt::format("sandwich {} ({},{}) upper {:.4f}", fam.spec(), M1, M2, b.upper.value_or(NAN)));
        }
      }
    }
  }
  v.require(seconds_since(t0) < 300, "runtime < 5min");
}

void nikolskii(Verdict& v) {
  for (const auto& [M1, M2] : {std::pair{0, 1}, std::pair{0, 2}}) {
    for (double p : {2.0, 4.0}) {
      const auto r = levy::nikolskii_check(2, M1, M2, p, 1000, 0);
      v.require(r.sup_violations == 0 && r.p_violations == 0,
                fmt::format("({},{}) p={} violations {}+{} worst sup {:.4f}", M1, M2, p, r.sup_violations,
                            r.p_violations, r.worst_sup_ratio));
    }
  }
}

void sandwich(Verdict& v) {
  const auto t = widths::l2_width_table(MultiplierFamily::finite_smooth(3, 0), 2, 1000000);
  double lo = INFINITY, hi = 0.0;
  for (std::size_t n = 1000; n <= 1000000; ++n) {
    lo = std::min(lo, t.values[n] * double(n));
    hi = std::max(hi, t.values[n] * double(n));
  }
  v.require(hi / lo < 10.0, fmt::format("max/min of n d_n {:.3f}", hi / lo));
  for (const auto& fam : {MultiplierFamily::exp_analytic(1, 1), MultiplierFamily::finite_smooth(3, 0)}) {
    for (double p : {1.0, 2.0}) {
      double worst = 0.0;
      for (int N = 3; N <= 20; ++N) {
        const auto plan = multipliers::plan_beta(fam, 2, N, 0.5, {p});
        worst = std::max(worst, plan.kclass_ratio.front().second);
      }
      v.require(worst <= 10.0, fmt::format("K ratio {} p={} max {:.3f}", fam.spec(), p, worst));
    }
  }
}

} // namespace

int main() {
  bool all = true;
  all &= report(1, "exact identities", exact_identities);
  all &= report(2, "addition formula", addition);
  all &= report(3, "Gegenbauer sum of zonal harmonics", gegenbauer);
  all &= report(4, "power rate for t^-gamma (ln t)^-xi multipliers", power_rates);
  all &= report(5, "stretched-exponential rates under both gradings", stretched_rates);
  all &= report(6, "Levy means against Parseval and the two-sided bounds", levy_means);
  all &= report(7, "Nikolskii inequalities on random polynomials", nikolskii);
  all &= report(8, "sandwich boundedness", sandwich);
  return all ? 0 : 1;
}
