#include "cxwidths/multipliers.hpp"

#include "cxwidths/errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace cxw::multipliers {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ArgumentError(msg);
}

} // namespace

MultiplierFamily MultiplierFamily::sobolev(double gamma, int d, Grading g) {
  require(gamma > 0.0 && std::isfinite(gamma), "sobolev: gamma must be > 0");
  require(d >= 2, "sobolev: d must be >= 2");
  MultiplierFamily f;
  f.kind = Kind::sobolev;
  f.gamma = gamma;
  f.d = d;
  f.grading = g;
  return f;
}

MultiplierFamily MultiplierFamily::finite_smooth(double gamma, double xi, Grading g) {
  require(gamma > 0.0 && std::isfinite(gamma), "finite_smooth: gamma must be > 0");
  require(xi >= 0.0 && std::isfinite(xi), "finite_smooth: xi must be >= 0");
  MultiplierFamily f;
  f.kind = Kind::finite_smooth;
  f.gamma = gamma;
  f.xi = xi;
  f.grading = g;
  return f;
}

MultiplierFamily MultiplierFamily::exp_analytic(double gamma, double r, Grading g) {
  require(gamma > 0.0 && std::isfinite(gamma), "exp_analytic: gamma must be > 0");
  require(r > 0.0 && std::isfinite(r), "exp_analytic: r must be > 0");
  MultiplierFamily f;
  f.kind = Kind::exp_analytic;
  f.gamma = gamma;
  f.r = r;
  f.grading = g;
  return f;
}

MultiplierFamily MultiplierFamily::identity(Grading g) {
  MultiplierFamily f;
  f.kind = Kind::identity;
  f.grading = g;
  return f;
}

MultiplierFamily MultiplierFamily::from_table(std::map<int, double> values, Grading g) {
  for (const auto& [l, v] : values) {
    require(l >= 0, "table: negative level");
    require(std::isfinite(v), "table: non-finite value");
  }
  MultiplierFamily f;
  f.kind = Kind::table;
  f.table = std::move(values);
  f.grading = g;
  return f;
}

MultiplierFamily MultiplierFamily::with_grading(Grading g) const {
  MultiplierFamily f = *this;
  f.grading = g;
  return f;
}

std::string MultiplierFamily::spec() const {
  switch (kind) {
    case Kind::sobolev: return fmt::format("sobolev:gamma={}", gamma);
    case Kind::finite_smooth: return fmt::format("fs:gamma={},xi={}", gamma, xi);
    case Kind::exp_analytic: return fmt::format("exp:gamma={},r={}", gamma, r);
    case Kind::identity: return "id";
    case Kind::table: {
      std::string s = "table:";
      bool first = true;
      for (const auto& [l, v] : table) {
        if (!first) s += ",";
        s += fmt::format("{}={}", l, v);
        first = false;
      }
      return s;
    }
  }
  return "?";
}

namespace {

double parse_number(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing");
    return x;
  } catch (const std::exception&) {
    throw ArgumentError("family spec: bad value for " + key + ": '" + v + "'");
  }
}

} // namespace

MultiplierFamily parse_family(const std::string& spec, int d, Grading g) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::map<std::string, std::string> kv;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) throw ArgumentError("family spec: expected key=value, got '" + item + "'");
      kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  auto take = [&](const std::string& key, std::optional<double> dflt = std::nullopt) {
    auto it = kv.find(key);
    if (it == kv.end()) {
      if (dflt) return *dflt;
      throw ArgumentError("family spec '" + spec + "': missing " + key);
    }
    const double v = parse_number(key, it->second);
    kv.erase(it);
    return v;
  };
  MultiplierFamily f;
  if (name == "sobolev") {
    f = MultiplierFamily::sobolev(take("gamma"), d, g);
  } else if (name == "fs" || name == "finite_smooth") {
    const double gamma = take("gamma");
    f = MultiplierFamily::finite_smooth(gamma, take("xi", 0.0), g);
  } else if (name == "exp" || name == "exp_analytic") {
    const double gamma = take("gamma");
    f = MultiplierFamily::exp_analytic(gamma, take("r"), g);
  } else if (name == "id" || name == "identity") {
    f = MultiplierFamily::identity(g);
  } else if (name == "table") {
    std::map<int, double> values;
    for (const auto& [k, v] : kv) {
      const double level = parse_number("level", k);
      if (level != std::floor(level)) throw ArgumentError("table: non-integer level '" + k + "'");
      values[static_cast<int>(level)] = parse_number(k, v);
    }
    kv.clear();
    f = MultiplierFamily::from_table(std::move(values), g);
  } else {
    throw ArgumentError("unknown multiplier family '" + name + "'");
  }
  if (!kv.empty()) throw ArgumentError("family spec '" + spec + "': unknown key " + kv.begin()->first);
  return f;
}

double lambda_value(const MultiplierFamily& fam, double t) {
  if (!(t >= 0.0)) throw ArgumentError("lambda: t must be >= 0");
  switch (fam.kind) {
    case Kind::sobolev:
      if (t == 0.0) return 0.0;
      return std::pow(t * (t + 2.0 * fam.d - 2.0), -fam.gamma / 2.0);
    case Kind::finite_smooth:
      if (t <= 1.0) return 0.0;
      return std::pow(t, -fam.gamma) * std::pow(std::log(t), -fam.xi);
    case Kind::exp_analytic:
      return std::exp(-fam.gamma * std::pow(t, fam.r));
    case Kind::identity:
      return 1.0;
    case Kind::table: {
      const double l = std::floor(t);
      if (l != t || l > static_cast<double>(std::numeric_limits<int>::max())) {
        throw ArgumentError("table: level must be an integer");
      }
      auto it = fam.table.find(static_cast<int>(l));
      if (it == fam.table.end()) throw ArgumentError(fmt::format("table: no value for level {}", l));
      return it->second;
    }
  }
  return 0.0;
}

double multiplier_at(const MultiplierFamily& fam, BiDegree b) {
  return lambda_value(fam, level_of(b, fam.grading));
}

void CoeffVector::set(BiDegree b, int j, std::complex<double> c) {
  if (b.m < 0 || b.n < 0) throw ArgumentError("coefficient: negative bidegree");
  if (j < 0 || Count(j) >= harmonic_dims::dim_complex_harmonic(d_, b)) {
    throw ArgumentError("coefficient: basis index out of range");
  }
  c_[{b, j}] = c;
}

double CoeffVector::norm2() const {
  double s = 0.0;
  for (const auto& [k, c] : c_) s += std::norm(c);
  return std::sqrt(s);
}

CoeffVector apply_multiplier(const CoeffVector& c, const MultiplierFamily& fam) {
  CoeffVector out(c.d());
  for (const auto& [k, v] : c.coeffs()) out.set(k.b, k.j, v * multiplier_at(fam, k.b));
  return out;
}

NkSequence build_Nk_sequence(const MultiplierFamily& fam, int N, int kmax) {
  if (N < 1) throw ArgumentError("N_k sequence: N must be >= 1");
  if (kmax < 1) throw ArgumentError("N_k sequence: kmax must be >= 1");
  if (!(lambda_value(fam, N) > 0.0)) throw ArgumentError(fmt::format("N_k sequence: lambda({}) = 0", N));
  NkSequence seq;
  seq.levels.push_back(N);
  constexpr double kTol = 1e-12;
  double prev = lambda_value(fam, N);
  int scanned_to = N;
  while (static_cast<int>(seq.levels.size()) < kmax) {
    const int nk = seq.levels.back();
    const double target = lambda_value(fam, nk);
    int found = -1;
    for (long l = std::max(nk + 1, 2); l <= static_cast<long>(nk) + kScanLimit; ++l) {
      const double v = lambda_value(fam, static_cast<double>(l));
      if (l > scanned_to) {
        if (v > prev * (1.0 + kTol)) {
          throw ArgumentError(fmt::format("N_k sequence: lambda increases at level {}", l));
        }
        if (v == prev) seq.plateaus.push_back(static_cast<int>(l));
        prev = v;
        scanned_to = static_cast<int>(l);
      }
      if (std::numbers::e * v <= target * (1.0 + kTol)) {
        found = static_cast<int>(l);
        break;
      }
    }
    if (found < 0) {
      throw DivergenceError(fmt::format("N_k sequence: no level within {} of N_k = {} satisfies e*lambda(l) <= lambda(N_k)",
                                        kScanLimit, nk));
    }
    seq.levels.push_back(found);
  }
  return seq;
}

BetaPlan plan_beta(const MultiplierFamily& fam, int d, int N, double eps, const std::vector<double>& ps) {
  if (!(eps > 0.0)) throw ArgumentError("plan_beta: eps must be > 0");
  BetaPlan plan;
  plan.N = N;
  plan.eps = eps;
  plan.d = d;
  const Grading g = fam.grading;
  const auto first = build_Nk_sequence(fam, N, 2);
  plan.theta12 = harmonic_dims::theta(d, first.levels[0], first.levels[1], g);
  const double t12 = plan.theta12.convert_to<double>();
  plan.M = static_cast<int>(std::floor(std::log(t12) / eps));
  const auto seq = build_Nk_sequence(fam, N, std::max(plan.M + 1, 2));
  plan.Nk = seq.levels;
  plan.plateaus = seq.plateaus;

  plan.mk.push_back(harmonic_dims::dim_T(d, N, g));
  for (int k = 1; k <= plan.M; ++k) {
    const double v = std::floor(std::exp(-eps * k) * t12) + 1.0;
    plan.mk.push_back(Count(static_cast<long long>(v)));
    plan.thetas.push_back(harmonic_dims::theta(d, plan.Nk[k - 1], plan.Nk[k], g));
    plan.C_eps += std::exp(-eps * k);
  }
  plan.C_eps += plan.M / t12;
  for (const auto& m : plan.mk) plan.beta += m;

  for (double p : ps) {
    if (!(p >= 1.0)) throw ArgumentError("plan_beta: p must be >= 1");
    // sum e^{-k(1-eps/2)} theta_k^{1/p} / theta12^{1/2}, divided by theta12^{1/p-1/2}
    double s = 0.0;
    for (int k = 1; k <= plan.M; ++k) {
      const double tk = plan.thetas[static_cast<std::size_t>(k - 1)].convert_to<double>();
      s += std::exp(-k * (1.0 - eps / 2.0)) * std::pow(tk / t12, 1.0 / p);
    }
    plan.kclass_ratio.emplace_back(p, s);
  }
  return plan;
}

} // namespace cxw::multipliers
