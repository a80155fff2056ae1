#pragma once

#include "cxwidths/harmonic_basis.hpp"

#include <span>
#include <vector>

namespace cxw::levy {

/// One real-valued orthonormal function: scale * Re(poly) or scale * Im(poly).
struct RealFunction {
  BiDegree bidegree;  // representative with m >= n; (n,m) carries the same multiplier
  int level = 0;
  MonomialPoly poly{1};
  bool imag_part = false;
  Rational sq_norm;  // integral of the real function squared, over omega_d, before scaling
};

/// Real L2-orthonormal coordinates for the harmonic levels M1 < l <= M2.
/// For each conjugate pair {H_{m,n}, H_{n,m}} the functions Y + conj(Y)
/// (real) and Y - conj(Y) (imaginary) are orthogonalized separately.
class RealCoordinateSystem {
public:
  RealCoordinateSystem(int d, int M1, int M2, Grading g);

  int d() const { return d_; }
  int M1() const { return M1_; }
  int M2() const { return M2_; }
  Grading grading() const { return g_; }
  std::size_t size() const { return funcs_.size(); }
  const std::vector<RealFunction>& functions() const { return funcs_; }

  double eval(std::size_t k, std::span<const std::complex<double>> z) const;
  /// Writes all size() function values at z into out.
  void eval_all(std::span<const std::complex<double>> z, std::span<double> out) const;

private:
  int d_, M1_, M2_;
  Grading g_;
  std::vector<RealFunction> funcs_;
  std::vector<CompiledPoly> compiled_;
  std::vector<double> scale_;
};

} // namespace cxw::levy
