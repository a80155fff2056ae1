#include "cxwidths/real_basis.hpp"

#include "cxwidths/errors.hpp"

#include <cmath>

namespace cxw::levy {

namespace {

// Exact Gram-Schmidt over the L2 inner product; zero vectors are dropped.
std::vector<std::pair<MonomialPoly, Rational>> orthogonalize(const std::vector<MonomialPoly>& in) {
  std::vector<std::pair<MonomialPoly, Rational>> out;
  for (const auto& p : in) {
    MonomialPoly v = p;
    for (const auto& [q, qq] : out) {
      const Rational c = inner(v, q) / qq;
      if (c != 0) v -= q * c;
    }
    if (v.is_zero()) continue;
    Rational n = inner(v, v);
    out.emplace_back(std::move(v), std::move(n));
  }
  return out;
}

} // namespace

RealCoordinateSystem::RealCoordinateSystem(int d, int M1, int M2, Grading g)
    : d_(d), M1_(M1), M2_(M2), g_(g) {
  if (d < 2) throw ArgumentError("levy window: d must be >= 2");
  if (M1 < -1 || M1 >= M2) throw ArgumentError("levy window: need -1 <= M1 < M2");
  const double w = sphere_mc::omega_d(d);
  for (int l = M1 + 1; l <= M2; ++l) {
    for (const auto& b : harmonic_dims::layer_members(l, g)) {
      if (b.m < b.n) continue;  // handled together with (n,m)
      const auto h = harmonic_basis::build_harmonic_basis(d, b);
      std::vector<MonomialPoly> re, im;
      for (const auto& y : h.vectors()) {
        const MonomialPoly yc = y.conj();
        re.push_back(y + yc);
        im.push_back(y - yc);
      }
      for (auto* group : {&re, &im}) {
        const bool imag = group == &im;
        for (auto& [p, n] : orthogonalize(*group)) {
          RealFunction f;
          f.bidegree = b;
          f.level = l;
          f.poly = std::move(p);
          f.imag_part = imag;
          f.sq_norm = std::move(n);
          funcs_.push_back(std::move(f));
        }
      }
    }
  }
  const Count expected = harmonic_dims::theta(d, M1, M2, g);
  if (Count(static_cast<long long>(funcs_.size())) != expected) {
    throw InternalError("real coordinate system: " + std::to_string(funcs_.size()) +
                        " functions, expected " + expected.str());
  }
  for (const auto& f : funcs_) {
    compiled_.push_back(f.poly.compile());
    scale_.push_back(1.0 / std::sqrt(f.sq_norm.convert_to<double>() * w));
  }
}

double RealCoordinateSystem::eval(std::size_t k, std::span<const std::complex<double>> z) const {
  if (k >= funcs_.size()) throw ArgumentError("real basis index out of range");
  const auto v = compiled_[k].eval(z);
  return scale_[k] * (funcs_[k].imag_part ? v.imag() : v.real());
}

void RealCoordinateSystem::eval_all(std::span<const std::complex<double>> z, std::span<double> out) const {
  if (out.size() != funcs_.size()) throw ArgumentError("eval_all: output size mismatch");
  for (std::size_t k = 0; k < funcs_.size(); ++k) out[k] = eval(k, z);
}

} // namespace cxw::levy
