#pragma once

#include "cxwidths/harmonic_dims.hpp"
#include "cxwidths/monomial.hpp"
#include "cxwidths/sphere_mc.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace cxw::harmonic_basis {

using sphere_mc::SpherePoint;
using cplx = std::complex<double>;

/// Orthogonal basis of H_{m,n}(Omega_d) with exact rational coefficients.
/// sq_norms[j] = ||vectors[j]||^2 / omega_d.
class HarmonicBasis {
public:
  HarmonicBasis(int d, BiDegree b, std::vector<MonomialPoly> vectors, std::vector<Rational> sq_norms);

  int d() const { return d_; }
  BiDegree bidegree() const { return b_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<MonomialPoly>& vectors() const { return vectors_; }
  const std::vector<Rational>& sq_norms() const { return sq_norms_; }

  /// vectors[j](z) / sqrt(sq_norms[j] * omega_d).
  cplx eval(std::size_t j, std::span<const cplx> z) const;

private:
  int d_;
  BiDegree b_;
  std::vector<MonomialPoly> vectors_;
  std::vector<Rational> sq_norms_;
  std::vector<CompiledPoly> compiled_;
  std::vector<double> scale_;
};

constexpr int kMaxBasisDegree = 8;
constexpr int kMaxBasisDim = 4;

/// H_{m,n} as the orthogonal complement of r^2 P_{m-1,n-1} inside P_{m,n},
/// by exact Gram-Schmidt. Throws InternalError if the count differs from d_{m,n}
/// or a vector fails to be harmonic.
HarmonicBasis build_harmonic_basis(int d, BiDegree b);

cplx eval_basis_function(const HarmonicBasis& h, std::size_t j, const SpherePoint& z);

struct ZonalKernel {
  int d = 2;
  BiDegree bidegree;
  SpherePoint pole;
};

/// (d_{m,n}/omega_d) R_{m,n}^{d-2}(<z,w>).
cplx zonal_eval(const ZonalKernel& k, const SpherePoint& z);

struct AdditionReport {
  double max_deviation = 0.0;       // |sum conj(Y_j(w)) Y_j(z) - Z_w(z)|
  double max_diag_deviation = 0.0;  // |sum |Y_j(z)|^2 - d_{m,n}/omega_d|
  std::size_t pairs = 0;
  std::uint64_t seed = 0;
};

AdditionReport verify_addition(int d, BiDegree b, std::size_t samples, std::uint64_t seed,
                               std::size_t chunk = sphere_mc::kDefaultChunk);
AdditionReport verify_addition(const HarmonicBasis& h, std::size_t samples, std::uint64_t seed,
                               std::size_t chunk = sphere_mc::kDefaultChunk);

/// max |(2d+2k-2)/(omega_d(2d-2)) C_k^{d-1}(Re<z,w>) - sum_{m+n=k} Z_w^{(m,n)}(z)|.
double verify_gegenbauer(int d, int k, std::size_t samples, std::uint64_t seed,
                         std::size_t chunk = sphere_mc::kDefaultChunk);

struct ProjectionEstimate {
  cplx value;
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo estimate of the integral of f(z) conj(Z_w^{(m,n)}(z)), i.e. (pi_{m,n} f)(w).
ProjectionEstimate project_mc(const std::function<cplx(const SpherePoint&)>& f, int d, BiDegree b,
                              const SpherePoint& w, std::size_t samples, std::uint64_t seed,
                              std::size_t chunk = sphere_mc::kDefaultChunk);

} // namespace cxw::harmonic_basis
