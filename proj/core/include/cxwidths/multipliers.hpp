#pragma once

#include "cxwidths/harmonic_dims.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cxw::multipliers {

enum class Kind { sobolev, finite_smooth, exp_analytic, identity, table };

struct MultiplierFamily {
  Kind kind = Kind::identity;
  double gamma = 0.0;
  double xi = 0.0;
  double r = 0.0;
  int d = 2;                    // sobolev depends on the ambient dimension
  std::map<int, double> table;  // level -> value
  Grading grading = Grading::max;

  static MultiplierFamily sobolev(double gamma, int d, Grading g = Grading::max);
  static MultiplierFamily finite_smooth(double gamma, double xi, Grading g = Grading::max);
  static MultiplierFamily exp_analytic(double gamma, double r, Grading g = Grading::max);
  static MultiplierFamily identity(Grading g = Grading::max);
  static MultiplierFamily from_table(std::map<int, double> values, Grading g = Grading::max);

  MultiplierFamily with_grading(Grading g) const;
  /// Canonical spec string, e.g. "fs:gamma=3,xi=0".
  std::string spec() const;
};

/// "sobolev:gamma=2", "fs:gamma=3,xi=0.5", "exp:gamma=1,r=0.5", "id",
/// "table:0=1,1=0.5,2=0.25".
MultiplierFamily parse_family(const std::string& spec, int d, Grading g);

double lambda_value(const MultiplierFamily& fam, double t);
double multiplier_at(const MultiplierFamily& fam, BiDegree b);

struct CoeffKey {
  BiDegree b;
  int j = 0;
  auto operator<=>(const CoeffKey&) const = default;
};

/// Coefficients against orthonormal bases of the H_{m,n}.
class CoeffVector {
public:
  explicit CoeffVector(int d) : d_(d) {}
  int d() const { return d_; }
  /// Throws ArgumentError unless 0 <= j < d_{m,n}.
  void set(BiDegree b, int j, std::complex<double> c);
  const std::map<CoeffKey, std::complex<double>>& coeffs() const { return c_; }
  /// L2 norm by Parseval.
  double norm2() const;

private:
  int d_;
  std::map<CoeffKey, std::complex<double>> c_;
};

CoeffVector apply_multiplier(const CoeffVector& c, const MultiplierFamily& fam);

struct NkSequence {
  std::vector<int> levels;
  std::vector<int> plateaus;  // levels l inside the scans with lambda(l) == lambda(l-1)
};

constexpr int kScanLimit = 1000000;

/// N_1 = N, N_{k+1} = min{ l > N_k : e*lambda(l) <= lambda(N_k) }, kmax terms.
NkSequence build_Nk_sequence(const MultiplierFamily& fam, int N, int kmax);

struct BetaPlan {
  int N = 0;
  double eps = 0.0;
  int d = 2;
  std::vector<int> Nk;      // N_1 .. N_{M+1}
  int M = 0;
  std::vector<Count> mk;    // m_0 .. m_M
  Count beta = 0;
  Count theta12 = 0;
  std::vector<Count> thetas;  // theta_{N_k,N_{k+1}}, k = 1..M
  std::vector<std::pair<double, double>> kclass_ratio;  // (p, ratio)
  double C_eps = 0.0;       // sum_{k=1}^M e^{-eps k} + M / theta12
  std::vector<int> plateaus;
};

BetaPlan plan_beta(const MultiplierFamily& fam, int d, int N, double eps,
                   const std::vector<double>& ps = {1.0, 1.5, 2.0});

} // namespace cxw::multipliers
