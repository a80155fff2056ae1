#include "cxwidths/special_fn.hpp"

#include "cxwidths/errors.hpp"

#include <cmath>
#include <string>

namespace cxw::special_fn {

namespace {

constexpr double kClampTol = 1e-12;

double clamp_unit(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw ArgumentError(std::string(what) + ": non-finite argument");
  }
  if (x > 1.0) {
    if (x > 1.0 + kClampTol) throw ArgumentError(std::string(what) + ": argument above 1");
    return 1.0;
  }
  if (x < -1.0) {
    if (x < -1.0 - kClampTol) throw ArgumentError(std::string(what) + ": argument below -1");
    return -1.0;
  }
  return x;
}

} // namespace

double jacobi_at_one(int k, double alpha) {
  if (k < 0) throw ArgumentError("jacobi: negative degree");
  double v = 1.0;
  for (int j = 1; j <= k; ++j) v *= (alpha + j) / j;
  return v;
}

double jacobi_eval(const JacobiParams& p, double x) {
  if (p.k < 0) throw ArgumentError("jacobi: negative degree");
  if (!std::isfinite(p.alpha) || !std::isfinite(p.beta)) {
    throw ArgumentError("jacobi: non-finite parameter");
  }
  if (p.alpha <= -1.0 || p.beta <= -1.0) {
    throw ArgumentError("jacobi: parameters must exceed -1");
  }
  x = clamp_unit(x, "jacobi");
  const double a = p.alpha;
  const double b = p.beta;
  if (p.k == 0) return 1.0;
  double prev = 1.0;
  double cur = 0.5 * ((a + b + 2.0) * x + (a - b));
  for (int n = 1; n < p.k; ++n) {
    const double s = 2.0 * n + a + b;
    const double c1 = 2.0 * (n + 1) * (n + a + b + 1) * s;
    const double c2 = (s + 1) * (s * (s + 2) * x + a * a - b * b);
    const double c3 = 2.0 * (n + a) * (n + b) * (s + 2);
    const double next = (c2 * cur - c3 * prev) / c1;
    prev = cur;
    cur = next;
  }
  return cur;
}

double gegenbauer_eval(int k, double lam, double t) {
  if (k < 0) throw ArgumentError("gegenbauer: negative degree");
  if (!(lam > 0.0)) throw ArgumentError("gegenbauer: lambda must be positive");
  t = clamp_unit(t, "gegenbauer");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * lam * t;
  for (int n = 1; n < k; ++n) {
    const double next = (2.0 * (n + lam) * t * cur - (n + 2.0 * lam - 1.0) * prev) / (n + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::complex<double> disk_poly_eval(const DiskPolyArg& a) {
  if (a.m < 0 || a.n < 0) throw ArgumentError("disk polynomial: negative degree");
  if (a.alpha < 0) throw ArgumentError("disk polynomial: alpha must be >= 0");
  std::complex<double> z = a.z;
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw ArgumentError("disk polynomial: non-finite argument");
  }
  double r = std::abs(z);
  if (r > 1.0) {
    if (r > 1.0 + kClampTol) throw ArgumentError("disk polynomial: |z| > 1");
    z /= r;
    r = 1.0;
  }
  const bool swap = a.m < a.n;
  const int hi = swap ? a.n : a.m;
  const int lo = swap ? a.m : a.n;
  const int gap = hi - lo;
  const JacobiParams jp{lo, static_cast<double>(a.alpha), static_cast<double>(gap)};
  const double x = 2.0 * r * r - 1.0;
  const double radial = jacobi_eval(jp, x) / jacobi_at_one(lo, a.alpha);
  const std::complex<double> w = swap ? std::conj(z) : z;
  std::complex<double> pw = 1.0;
  for (int j = 0; j < gap; ++j) pw *= w;
  return pw * radial;
}

} // namespace cxw::special_fn
