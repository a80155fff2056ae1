#pragma once

#include <complex>

namespace cxw::special_fn {

struct JacobiParams {
  int k = 0;
  double alpha = 0.0;
  double beta = 0.0;
};

struct DiskPolyArg {
  int m = 0;
  int n = 0;
  int alpha = 0;
  std::complex<double> z;
};

/// P_k^{(alpha,beta)}(x) by forward three-term recurrence.
/// |x| up to 1+1e-12 is clamped, anything beyond throws ArgumentError.
double jacobi_eval(const JacobiParams& p, double x);

/// P_k^{(alpha,beta)}(1) = binom(k+alpha, k), evaluated as a product.
double jacobi_at_one(int k, double alpha);

/// Gegenbauer C_k^lam(t), standard normalization C_k^lam(1) = binom(k+2lam-1, k).
double gegenbauer_eval(int k, double lam, double t);

/// Disk polynomial R_{m,n}^alpha(z), normalized so that R(1) = 1.
std::complex<double> disk_poly_eval(const DiskPolyArg& a);

} // namespace cxw::special_fn
