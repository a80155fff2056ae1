#include "cxwidths/monomial.hpp"

#include "cxwidths/errors.hpp"

#include <algorithm>
#include <numeric>

namespace cxw {

std::string rational_to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt num(s.substr(0, slash));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw DataError("rational: zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw DataError("rational: cannot parse '" + s + "'");
  }
}

MonomialPoly::MonomialPoly(int d) : d_(d) {
  if (d < 1) throw ArgumentError("MonomialPoly: d must be >= 1");
}

void MonomialPoly::add_term(const MultiIndex& alpha, const MultiIndex& beta, const Rational& c) {
  if (static_cast<int>(alpha.size()) != d_ || static_cast<int>(beta.size()) != d_) {
    throw ArgumentError("MonomialPoly: multi-index length differs from d");
  }
  if (c == 0) return;
  MonomialKey key{alpha, beta};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MonomialPoly MonomialPoly::conj() const {
  MonomialPoly out(d_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(MonomialKey{k.beta, k.alpha}, c);
  return out;
}

MonomialPoly MonomialPoly::times_r2() const {
  MonomialPoly out(d_);
  for (const auto& [k, c] : terms_) {
    for (int j = 0; j < d_; ++j) {
      MultiIndex a = k.alpha;
      MultiIndex b = k.beta;
      ++a[j];
      ++b[j];
      out.add_term(a, b, c);
    }
  }
  return out;
}

MonomialPoly MonomialPoly::laplacian() const {
  MonomialPoly out(d_);
  for (const auto& [k, c] : terms_) {
    for (int j = 0; j < d_; ++j) {
      if (k.alpha[j] == 0 || k.beta[j] == 0) continue;
      MultiIndex a = k.alpha;
      MultiIndex b = k.beta;
      const int f = 4 * a[j] * b[j];
      --a[j];
      --b[j];
      out.add_term(a, b, c * f);
    }
  }
  return out;
}

MonomialPoly& MonomialPoly::operator+=(const MonomialPoly& o) {
  if (o.d_ != d_) throw ArgumentError("MonomialPoly: dimension mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k.alpha, k.beta, c);
  return *this;
}

MonomialPoly& MonomialPoly::operator-=(const MonomialPoly& o) {
  if (o.d_ != d_) throw ArgumentError("MonomialPoly: dimension mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k.alpha, k.beta, -c);
  return *this;
}

MonomialPoly& MonomialPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

std::complex<double> MonomialPoly::eval(std::span<const std::complex<double>> z) const {
  return CompiledPoly(*this).eval(z);
}

CompiledPoly MonomialPoly::compile() const { return CompiledPoly(*this); }

CompiledPoly::CompiledPoly(const MonomialPoly& p) : d_(p.d()) {
  for (const auto& [k, c] : p.terms()) {
    for (int v : k.alpha) {
      exps_.push_back(v);
      max_exp_ = std::max(max_exp_, v);
    }
    for (int v : k.beta) {
      exps_.push_back(v);
      max_exp_ = std::max(max_exp_, v);
    }
    coefs_.push_back(c.convert_to<double>());
  }
}

std::complex<double> CompiledPoly::eval(std::span<const std::complex<double>> z) const {
  if (static_cast<int>(z.size()) != d_) throw ArgumentError("eval: point dimension differs from d");
  const int stride = max_exp_ + 1;
  // powers of z_j and conj(z_j), laid out [j][e]
  std::vector<std::complex<double>> zp(static_cast<std::size_t>(d_ * stride));
  std::vector<std::complex<double>> cp(static_cast<std::size_t>(d_ * stride));
  for (int j = 0; j < d_; ++j) {
    std::complex<double> a = 1.0;
    std::complex<double> b = 1.0;
    for (int e = 0; e <= max_exp_; ++e) {
      zp[static_cast<std::size_t>(j * stride + e)] = a;
      cp[static_cast<std::size_t>(j * stride + e)] = b;
      a *= z[static_cast<std::size_t>(j)];
      b *= std::conj(z[static_cast<std::size_t>(j)]);
    }
  }
  std::complex<double> s = 0.0;
  const std::size_t width = 2 * static_cast<std::size_t>(d_);
  for (std::size_t t = 0; t < coefs_.size(); ++t) {
    const int* e = exps_.data() + t * width;
    std::complex<double> term = coefs_[t];
    for (int j = 0; j < d_; ++j) {
      term *= zp[static_cast<std::size_t>(j * stride + e[j])];
      term *= cp[static_cast<std::size_t>(j * stride + e[d_ + j])];
    }
    s += term;
  }
  return s;
}

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

} // namespace

Rational monomial_inner(int d, const MultiIndex& a, const MultiIndex& b, const MultiIndex& c,
                        const MultiIndex& e) {
  const auto ud = static_cast<std::size_t>(d);
  if (d < 1 || a.size() != ud || b.size() != ud || c.size() != ud || e.size() != ud) {
    throw ArgumentError("monomial_inner: multi-index length differs from d");
  }
  BigInt num = factorial(d - 1);
  int total = 0;
  for (std::size_t j = 0; j < ud; ++j) {
    if (a[j] + e[j] != b[j] + c[j]) return Rational(0);
    num *= factorial(a[j] + e[j]);
    total += a[j] + e[j];
  }
  return Rational(num, factorial(d - 1 + total));
}

namespace {

MultiIndex delta_of(const MonomialKey& k) {
  MultiIndex dl(k.alpha.size());
  for (std::size_t j = 0; j < dl.size(); ++j) dl[j] = k.alpha[j] - k.beta[j];
  return dl;
}

} // namespace

Rational inner(const MonomialPoly& f, const MonomialPoly& g) {
  if (f.d() != g.d()) throw ArgumentError("inner: dimension mismatch");
  // only terms with equal alpha - beta pair up
  std::map<MultiIndex, std::vector<const std::pair<const MonomialKey, Rational>*>> by_delta;
  for (const auto& kv : g.terms()) by_delta[delta_of(kv.first)].push_back(&kv);
  Rational s = 0;
  for (const auto& [kf, cf] : f.terms()) {
    auto it = by_delta.find(delta_of(kf));
    if (it == by_delta.end()) continue;
    for (const auto* kg : it->second) {
      s += cf * kg->second * monomial_inner(f.d(), kf.alpha, kf.beta, kg->first.alpha, kg->first.beta);
    }
  }
  return s;
}

std::vector<MultiIndex> multi_indices(int d, int k) {
  if (d < 1 || k < 0) throw ArgumentError("multi_indices: need d >= 1, k >= 0");
  std::vector<MultiIndex> out;
  MultiIndex cur(static_cast<std::size_t>(d), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == d - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, k);
  return out;
}

} // namespace cxw
