#include "cxwidths/sphere_mc.hpp"

#include "cxwidths/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace cxw::sphere_mc {

SpherePoint::SpherePoint(std::vector<cplx> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw ArgumentError("sphere point: empty coordinates");
  double s = 0.0;
  for (const auto& c : coords_) s += std::norm(c);
  if (!(std::abs(s - 1.0) <= 1e-12)) throw ArgumentError("sphere point: not of unit norm");
}

cplx inner(std::span<const cplx> z, std::span<const cplx> w) {
  if (z.size() != w.size()) throw ArgumentError("inner: dimension mismatch");
  cplx s = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) s += z[j] * std::conj(w[j]);
  return s;
}

cplx inner(const SpherePoint& z, const SpherePoint& w) {
  return inner(std::span<const cplx>(z.coords()), std::span<const cplx>(w.coords()));
}

std::vector<double> upsilon(const SpherePoint& z) {
  std::vector<double> x;
  x.reserve(2 * z.coords().size());
  for (const auto& c : z.coords()) {
    x.push_back(c.real());
    x.push_back(c.imag());
  }
  return x;
}

double omega_d(int d) {
  if (d < 1) throw ArgumentError("omega_d: d must be >= 1");
  double f = 1.0;
  for (int j = 2; j <= d - 1; ++j) f *= j;
  return 2.0 * std::pow(std::numbers::pi, d) / f;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t chunk) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ chunk);
}

std::vector<double> sample_real_sphere(int dim, std::size_t count, std::uint64_t seed,
                                       std::uint64_t stream, std::size_t chunk) {
  if (dim < 1) throw ArgumentError("sample: dimension must be >= 1");
  if (chunk == 0) throw ArgumentError("sample: chunk must be >= 1");
  const auto ud = static_cast<std::size_t>(dim);
  std::vector<double> out(count * ud);
  const std::size_t nchunks = (count + chunk - 1) / chunk;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(nchunks); ++c) {
    std::mt19937_64 gen(derive_seed(seed, stream, static_cast<std::uint64_t>(c)));
    std::normal_distribution<double> g(0.0, 1.0);
    const std::size_t begin = static_cast<std::size_t>(c) * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    for (std::size_t i = begin; i < end; ++i) {
      double* row = out.data() + i * ud;
      double s = 0.0;
      do {
        s = 0.0;
        for (std::size_t j = 0; j < ud; ++j) {
          row[j] = g(gen);
          s += row[j] * row[j];
        }
      } while (s == 0.0);
      const double inv = 1.0 / std::sqrt(s);
      for (std::size_t j = 0; j < ud; ++j) row[j] *= inv;
    }
  }
  return out;
}

std::vector<SpherePoint> sample_omega(int d, std::size_t count, std::uint64_t seed,
                                      std::size_t chunk, std::uint64_t stream) {
  if (d < 1) throw ArgumentError("sample_omega: d must be >= 1");
  if (count < 1) throw ArgumentError("sample_omega: count must be >= 1");
  const auto raw = sample_real_sphere(2 * d, count, seed, stream, chunk);
  std::vector<SpherePoint> pts;
  pts.reserve(count);
  const auto ud = static_cast<std::size_t>(d);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<cplx> z(ud);
    for (std::size_t j = 0; j < ud; ++j) z[j] = {raw[i * 2 * ud + 2 * j], raw[i * 2 * ud + 2 * j + 1]};
    pts.emplace_back(std::move(z));
  }
  return pts;
}

McEstimate mc_integral(std::span<const double> values, int d) {
  if (values.empty()) throw ArgumentError("mc_integral: no samples");
  const double w = omega_d(d);
  double mean = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw DataError("mc_integral: non-finite sample");
    mean += v;
  }
  const auto n = static_cast<double>(values.size());
  mean /= n;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var = values.size() > 1 ? var / (n - 1.0) : 0.0;
  McEstimate e;
  e.value = w * mean;
  e.std_error = w * std::sqrt(var / n);
  e.samples = values.size();
  return e;
}

McEstimate mc_lp_norm(std::span<const double> abs_values, double p, int d) {
  if (abs_values.empty()) throw ArgumentError("mc_lp_norm: no samples");
  if (!(p >= 1.0)) throw ArgumentError("mc_lp_norm: p must be >= 1");
  McEstimate e;
  e.samples = abs_values.size();
  if (std::isinf(p)) {
    double mx = 0.0;
    for (double v : abs_values) {
      if (!std::isfinite(v)) throw DataError("mc_lp_norm: non-finite sample");
      mx = std::max(mx, std::abs(v));
    }
    e.value = mx;
    e.lower_bias = true;
    return e;
  }
  std::vector<double> powered(abs_values.size());
  std::transform(abs_values.begin(), abs_values.end(), powered.begin(),
                 [p](double v) { return std::pow(std::abs(v), p); });
  const McEstimate integral = mc_integral(powered, d);
  e.value = std::pow(integral.value, 1.0 / p);
  // delta method: d(I^{1/p}) = I^{1/p} dI / (p I)
  e.std_error = integral.value > 0.0 ? e.value * integral.std_error / (p * integral.value) : 0.0;
  return e;
}

McEstimate sup_norm_refined(const std::function<double(const SpherePoint&)>& abs_f, int d,
                            std::size_t samples, std::uint64_t seed, std::size_t chunk) {
  const auto pts = sample_omega(d, samples, seed, chunk);
  std::vector<double> vals(pts.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(pts.size()); ++i) {
    vals[static_cast<std::size_t>(i)] = abs_f(pts[static_cast<std::size_t>(i)]);
  }
  std::size_t arg = 0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (!std::isfinite(vals[i])) throw DataError("sup_norm: non-finite sample");
    if (vals[i] > vals[arg]) arg = i;
  }
  std::vector<cplx> best = pts[arg].coords();
  double best_val = vals[arg];

  constexpr int kRounds = 40;
  constexpr int kCandidates = 64;
  std::mt19937_64 gen(derive_seed(seed, 0x5c0fULL, 0));
  std::normal_distribution<double> g(0.0, 1.0);
  double radius = 0.25;
  const auto ud = static_cast<std::size_t>(d);
  for (int round = 0; round < kRounds; ++round) {
    bool improved = false;
    for (int c = 0; c < kCandidates; ++c) {
      std::vector<cplx> z(ud);
      double s = 0.0;
      for (std::size_t j = 0; j < ud; ++j) {
        z[j] = best[j] + radius * cplx(g(gen), g(gen));
        s += std::norm(z[j]);
      }
      const double inv = 1.0 / std::sqrt(s);
      for (auto& v : z) v *= inv;
      const double fv = abs_f(SpherePoint(z));
      if (fv > best_val) {
        best_val = fv;
        best = std::move(z);
        improved = true;
      }
    }
    if (!improved) radius *= 0.5;
  }
  McEstimate e;
  e.value = best_val;
  e.samples = samples;
  e.seed = seed;
  e.lower_bias = true;
  return e;
}

} // namespace cxw::sphere_mc
