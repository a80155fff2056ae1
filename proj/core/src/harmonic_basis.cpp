#include "cxwidths/harmonic_basis.hpp"

#include "cxwidths/errors.hpp"
#include "cxwidths/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace cxw::harmonic_basis {

HarmonicBasis::HarmonicBasis(int d, BiDegree b, std::vector<MonomialPoly> vectors,
                             std::vector<Rational> sq_norms)
    : d_(d), b_(b), vectors_(std::move(vectors)), sq_norms_(std::move(sq_norms)) {
  if (vectors_.size() != sq_norms_.size()) throw ArgumentError("HarmonicBasis: size mismatch");
  const double w = sphere_mc::omega_d(d_);
  for (std::size_t j = 0; j < vectors_.size(); ++j) {
    if (sq_norms_[j] <= 0) throw ArgumentError("HarmonicBasis: non-positive squared norm");
    compiled_.push_back(vectors_[j].compile());
    scale_.push_back(1.0 / std::sqrt(sq_norms_[j].convert_to<double>() * w));
  }
}

cplx HarmonicBasis::eval(std::size_t j, std::span<const cplx> z) const {
  if (j >= compiled_.size()) throw ArgumentError("basis index out of range");
  return compiled_[j].eval(z) * scale_[j];
}

namespace {

using Vec = std::vector<Rational>;

// Gram-Schmidt state inside one alpha-beta block of P_{m,n}
struct Block {
  std::vector<MonomialKey> monos;  // coordinates
  std::vector<std::size_t> order;  // global generation index of each monomial
  std::vector<std::vector<Rational>> gram;
  std::vector<Vec> q;              // accepted orthogonal vectors
  std::vector<Rational> qq;        // <q,q>

  Rational dot(const Vec& u, const Vec& v) const {
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      Rational row = 0;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] != 0 && gram[i][j] != 0) row += gram[i][j] * v[j];
      }
      s += u[i] * row;
    }
    return s;
  }

  // Orthogonalizes v against q; appends and returns true when nonzero.
  bool push(Vec v) {
    for (std::size_t k = 0; k < q.size(); ++k) {
      const Rational c = dot(v, q[k]) / qq[k];
      if (c == 0) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * q[k][i];
    }
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) return false;
    qq.push_back(dot(v, v));
    q.push_back(std::move(v));
    return true;
  }
};

MultiIndex delta(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = a[j] - b[j];
  return r;
}

} // namespace

HarmonicBasis build_harmonic_basis(int d, BiDegree b) {
  if (d < 2) throw ArgumentError("build_harmonic_basis: d must be >= 2");
  if (b.m < 0 || b.n < 0) throw ArgumentError("build_harmonic_basis: negative bidegree");
  if (d > kMaxBasisDim || b.m > kMaxBasisDegree || b.n > kMaxBasisDegree) {
    throw ArgumentError("build_harmonic_basis: outside feasibility guard (m,n <= 8, d <= 4)");
  }
  const auto alphas = multi_indices(d, b.m);
  const auto betas = multi_indices(d, b.n);

  std::map<MultiIndex, Block> blocks;
  std::size_t gen = 0;
  for (const auto& a : alphas) {
    for (const auto& be : betas) {
      Block& blk = blocks[delta(a, be)];
      blk.monos.push_back({a, be});
      blk.order.push_back(gen++);
    }
  }
  for (auto& [dl, blk] : blocks) {
    const std::size_t n = blk.monos.size();
    blk.gram.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        blk.gram[i][j] = monomial_inner(d, blk.monos[i].alpha, blk.monos[i].beta, blk.monos[j].alpha,
                                        blk.monos[j].beta);
        blk.gram[j][i] = blk.gram[i][j];
      }
    }
  }

  // r^2 * P_{m-1,n-1} stays inside the same block
  if (b.m > 0 && b.n > 0) {
    for (const auto& a : multi_indices(d, b.m - 1)) {
      for (const auto& be : multi_indices(d, b.n - 1)) {
        Block& blk = blocks.at(delta(a, be));
        Vec v(blk.monos.size());
        for (int j = 0; j < d; ++j) {
          MonomialKey key{a, be};
          ++key.alpha[static_cast<std::size_t>(j)];
          ++key.beta[static_cast<std::size_t>(j)];
          const auto pos = std::find(blk.monos.begin(), blk.monos.end(), key) - blk.monos.begin();
          v[static_cast<std::size_t>(pos)] += 1;
        }
        blk.push(std::move(v));
      }
    }
  }

  struct Survivor {
    std::size_t order;
    MonomialPoly poly;
    Rational sq;
  };
  std::vector<Survivor> out;
  for (auto& [dl, blk] : blocks) {
    std::vector<std::size_t> idx(blk.monos.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return blk.order[x] < blk.order[y]; });
    for (std::size_t i : idx) {
      Vec e(blk.monos.size());
      e[i] = 1;
      if (!blk.push(std::move(e))) continue;
      MonomialPoly p(d);
      const Vec& v = blk.q.back();
      for (std::size_t t = 0; t < v.size(); ++t) p.add_term(blk.monos[t].alpha, blk.monos[t].beta, v[t]);
      out.push_back({blk.order[i], std::move(p), blk.qq.back()});
    }
  }
  std::sort(out.begin(), out.end(), [](const Survivor& x, const Survivor& y) { return x.order < y.order; });

  const Count expected = harmonic_dims::dim_complex_harmonic(d, b);
  if (Count(static_cast<long long>(out.size())) != expected) {
    throw InternalError("build_harmonic_basis: produced " + std::to_string(out.size()) +
                        " vectors, expected " + expected.str());
  }
  std::vector<MonomialPoly> vecs;
  std::vector<Rational> sq;
  for (auto& s : out) {
    if (!s.poly.laplacian().is_zero()) throw InternalError("build_harmonic_basis: vector is not harmonic");
    vecs.push_back(std::move(s.poly));
    sq.push_back(std::move(s.sq));
  }
  return HarmonicBasis(d, b, std::move(vecs), std::move(sq));
}

cplx eval_basis_function(const HarmonicBasis& h, std::size_t j, const SpherePoint& z) {
  if (z.dim() != h.d()) throw ArgumentError("eval_basis_function: point dimension differs from d");
  return h.eval(j, z.coords());
}

cplx zonal_eval(const ZonalKernel& k, const SpherePoint& z) {
  if (k.pole.dim() != k.d || z.dim() != k.d) throw ArgumentError("zonal_eval: dimension mismatch");
  const double dmn = harmonic_dims::dim_complex_harmonic(k.d, k.bidegree).convert_to<double>();
  const cplx t = sphere_mc::inner(z, k.pole);
  const cplx r = special_fn::disk_poly_eval({k.bidegree.m, k.bidegree.n, k.d - 2, t});
  return dmn / sphere_mc::omega_d(k.d) * r;
}

AdditionReport verify_addition(const HarmonicBasis& h, std::size_t samples, std::uint64_t seed,
                               std::size_t chunk) {
  const int d = h.d();
  const auto zs = sphere_mc::sample_omega(d, samples, seed, chunk, 0);
  const auto ws = sphere_mc::sample_omega(d, samples, seed, chunk, 1);
  const double dmn = harmonic_dims::dim_complex_harmonic(d, h.bidegree()).convert_to<double>();
  const double diag = dmn / sphere_mc::omega_d(d);
  AdditionReport rep;
  rep.pairs = samples;
  rep.seed = seed;
  std::vector<double> dev(samples), ddev(samples);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(samples); ++i) {
    const auto& z = zs[static_cast<std::size_t>(i)];
    const auto& w = ws[static_cast<std::size_t>(i)];
    cplx sum = 0.0;
    double sq = 0.0;
    for (std::size_t j = 0; j < h.size(); ++j) {
      const cplx yz = h.eval(j, z.coords());
      sum += std::conj(h.eval(j, w.coords())) * yz;
      sq += std::norm(yz);
    }
    const cplx zonal = zonal_eval({d, h.bidegree(), w}, z);
    dev[static_cast<std::size_t>(i)] = std::abs(sum - zonal);
    ddev[static_cast<std::size_t>(i)] = std::abs(sq - diag);
  }
  for (std::size_t i = 0; i < samples; ++i) {
    rep.max_deviation = std::max(rep.max_deviation, dev[i]);
    rep.max_diag_deviation = std::max(rep.max_diag_deviation, ddev[i]);
  }
  return rep;
}

AdditionReport verify_addition(int d, BiDegree b, std::size_t samples, std::uint64_t seed,
                               std::size_t chunk) {
  return verify_addition(build_harmonic_basis(d, b), samples, seed, chunk);
}

double verify_gegenbauer(int d, int k, std::size_t samples, std::uint64_t seed, std::size_t chunk) {
  if (d < 2) throw ArgumentError("verify_gegenbauer: d must be >= 2");
  if (k < 0) throw ArgumentError("verify_gegenbauer: negative degree");
  const auto zs = sphere_mc::sample_omega(d, samples, seed, chunk, 0);
  const auto ws = sphere_mc::sample_omega(d, samples, seed, chunk, 1);
  const double w = sphere_mc::omega_d(d);
  const double factor = (2.0 * d + 2.0 * k - 2.0) / (w * (2.0 * d - 2.0));
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = sphere_mc::inner(zs[i], ws[i]).real();
    const double lhs = factor * special_fn::gegenbauer_eval(k, d - 1.0, t);
    cplx rhs = 0.0;
    for (int m = 0; m <= k; ++m) rhs += zonal_eval({d, {m, k - m}, ws[i]}, zs[i]);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

ProjectionEstimate project_mc(const std::function<cplx(const SpherePoint&)>& f, int d, BiDegree b,
                              const SpherePoint& w, std::size_t samples, std::uint64_t seed,
                              std::size_t chunk) {
  const auto zs = sphere_mc::sample_omega(d, samples, seed, chunk, 0);
  const ZonalKernel kern{d, b, w};
  std::vector<double> re(samples), im(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const cplx fv = f(zs[i]);
    if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag())) {
      throw DataError("project_mc: non-finite function value");
    }
    const cplx v = fv * std::conj(zonal_eval(kern, zs[i]));
    re[i] = v.real();
    im[i] = v.imag();
  }
  const auto er = sphere_mc::mc_integral(re, d);
  const auto ei = sphere_mc::mc_integral(im, d);
  ProjectionEstimate out;
  out.value = {er.value, ei.value};
  out.std_error = std::hypot(er.std_error, ei.std_error);
  out.samples = samples;
  out.seed = seed;
  return out;
}

} // namespace cxw::harmonic_basis
