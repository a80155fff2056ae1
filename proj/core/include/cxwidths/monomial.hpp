#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace cxw {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;
using MultiIndex = std::vector<int>;

/// "p/q" (denominator always written, "0/1" for zero).
std::string rational_to_string(const Rational& q);
/// Accepts "p/q" or "p"; throws DataError on junk.
Rational rational_from_string(const std::string& s);

struct MonomialKey {
  MultiIndex alpha;
  MultiIndex beta;
  auto operator<=>(const MonomialKey&) const = default;
};

class CompiledPoly;

/// Sum of c * z^alpha * conj(z)^beta with exact rational coefficients.
class MonomialPoly {
public:
  explicit MonomialPoly(int d = 1);

  int d() const { return d_; }
  const std::map<MonomialKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c to the coefficient of z^alpha zbar^beta; zero results are erased.
  void add_term(const MultiIndex& alpha, const MultiIndex& beta, const Rational& c);

  MonomialPoly conj() const;
  /// Multiplies by sum_j z_j zbar_j (which is 1 on the sphere).
  MonomialPoly times_r2() const;
  /// 4 sum_j d^2/(dz_j dzbar_j).
  MonomialPoly laplacian() const;

  MonomialPoly& operator+=(const MonomialPoly& o);
  MonomialPoly& operator-=(const MonomialPoly& o);
  MonomialPoly& operator*=(const Rational& c);
  friend MonomialPoly operator+(MonomialPoly a, const MonomialPoly& b) { return a += b; }
  friend MonomialPoly operator-(MonomialPoly a, const MonomialPoly& b) { return a -= b; }
  friend MonomialPoly operator*(MonomialPoly a, const Rational& c) { return a *= c; }
  bool operator==(const MonomialPoly& o) const { return d_ == o.d_ && terms_ == o.terms_; }

  std::complex<double> eval(std::span<const std::complex<double>> z) const;
  CompiledPoly compile() const;

private:
  int d_;
  std::map<MonomialKey, Rational> terms_;
};

/// Double-precision copy of a MonomialPoly for fast repeated evaluation.
class CompiledPoly {
public:
  CompiledPoly() = default;
  CompiledPoly(const MonomialPoly& p);
  std::complex<double> eval(std::span<const std::complex<double>> z) const;

private:
  int d_ = 0;
  int max_exp_ = 0;
  std::vector<int> exps_;  // per term: alpha then beta, 2d entries
  std::vector<double> coefs_;
};

/// <z^a zbar^b, z^c zbar^e> / omega_d, exact.
Rational monomial_inner(int d, const MultiIndex& a, const MultiIndex& b, const MultiIndex& c,
                        const MultiIndex& e);

/// <f, g> / omega_d = (1/omega_d) * integral of f conj(g) over the sphere.
Rational inner(const MonomialPoly& f, const MonomialPoly& g);

/// All multi-indices of length d and total degree k, descending lexicographic.
std::vector<MultiIndex> multi_indices(int d, int k);

} // namespace cxw
