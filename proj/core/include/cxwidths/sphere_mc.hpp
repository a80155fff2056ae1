#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace cxw::sphere_mc {

using cplx = std::complex<double>;

/// A point of the unit sphere in C^d.
class SpherePoint {
public:
  SpherePoint() = default;
  /// Throws ArgumentError unless | sum |z_j|^2 - 1 | <= 1e-12.
  explicit SpherePoint(std::vector<cplx> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<cplx>& coords() const { return coords_; }
  const cplx& operator[](std::size_t i) const { return coords_[i]; }

private:
  std::vector<cplx> coords_;
};

/// <z,w> = sum z_j conj(w_j).
cplx inner(std::span<const cplx> z, std::span<const cplx> w);
cplx inner(const SpherePoint& z, const SpherePoint& w);

/// Realification C^d -> R^{2d}: (Re z_1, Im z_1, Re z_2, ...).
std::vector<double> upsilon(const SpherePoint& z);

/// Surface area of S^{2d-1}: 2 pi^d / (d-1)!.
double omega_d(int d);

/// Counter-based seed for (seed, stream, chunk), splitmix64 finalizer.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t chunk);

constexpr std::size_t kDefaultChunk = 4096;

/// `count` uniform points of S^{dim-1} in R^dim, row-major (count x dim).
/// Each chunk of `chunk` rows has its own generator, so the output does not
/// depend on how many threads fill the chunks.
std::vector<double> sample_real_sphere(int dim, std::size_t count, std::uint64_t seed,
                                       std::uint64_t stream = 0, std::size_t chunk = kDefaultChunk);

/// Uniform points of the complex sphere Omega_d.
std::vector<SpherePoint> sample_omega(int d, std::size_t count, std::uint64_t seed,
                                      std::size_t chunk = kDefaultChunk, std::uint64_t stream = 0);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  bool lower_bias = false;  // sup-norm estimates only bound from below
};

/// Integral of f over Omega_d (unnormalized measure) from values at uniform points.
McEstimate mc_integral(std::span<const double> values, int d);

/// ||f||_p from |f| at uniform points; p = +inf gives the sample max.
McEstimate mc_lp_norm(std::span<const double> abs_values, double p, int d);

/// Sup of a nonnegative function: dense sampling then shrinking-cap search
/// around the running maximizer. Always a lower estimate.
McEstimate sup_norm_refined(const std::function<double(const SpherePoint&)>& abs_f, int d,
                            std::size_t samples, std::uint64_t seed,
                            std::size_t chunk = kDefaultChunk);

} // namespace cxw::sphere_mc
