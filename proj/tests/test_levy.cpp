#include "cxwidths/errors.hpp"
#include "cxwidths/harmonic_dims.hpp"
#include "cxwidths/levy.hpp"
#include "cxwidths/monomial.hpp"
#include "cxwidths/sphere_mc.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <cmath>

using namespace cxw;
using namespace cxw::levy;
using multipliers::MultiplierFamily;
using sphere_mc::omega_d;

namespace {

// Coefficients of f in the real coordinate system, by exact interpolation on random points.
std::vector<double> coordinates_of(const RealCoordinateSystem& rc, const std::function<double(const sphere_mc::SpherePoint&)>& f) {
  const std::size_t s = rc.size();
  const auto pts = sphere_mc::sample_omega(rc.d(), 4 * s, 77);
  Eigen::MatrixXd A(pts.size(), s);
  Eigen::VectorXd y(pts.size());
  std::vector<double> row(s);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    rc.eval_all(pts[i].coords(), row);
    for (std::size_t k = 0; k < s; ++k) A(Eigen::Index(i), Eigen::Index(k)) = row[k];
    y(Eigen::Index(i)) = f(pts[i]);
  }
  const Eigen::VectorXd c = A.colPivHouseholderQr().solve(y);
  EXPECT_LT((A * c - y).norm(), 1e-10);
  return {c.data(), c.data() + c.size()};
}

} // namespace

TEST(RealBasis, CountMatchesTheta) {
  for (Grading g : {Grading::star, Grading::max}) {
    for (int M1 = -1; M1 <= 1; ++M1) {
      for (int M2 = M1 + 1; M2 <= 3; ++M2) {
        const RealCoordinateSystem rc(2, M1, M2, g);
        EXPECT_EQ(Count(static_cast<long long>(rc.size())), harmonic_dims::theta(2, M1, M2, g));
      }
    }
  }
}

TEST(RealBasis, OrthonormalByExactInnerProducts) {
  const RealCoordinateSystem rc(2, -1, 2, Grading::max);
  const auto& fs = rc.functions();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    // real functions: <f, f> with f real equals the stored squared norm
    EXPECT_EQ(inner(fs[i].poly, fs[i].poly), fs[i].sq_norm);
    // real parts are self-conjugate, imaginary parts are stored as Y - conj(Y)
    EXPECT_EQ(fs[i].poly.conj(), fs[i].imag_part ? fs[i].poly * Rational(-1) : fs[i].poly);
    for (std::size_t j = i + 1; j < fs.size(); ++j) EXPECT_EQ(inner(fs[i].poly, fs[j].poly), Rational(0)) << i << " " << j;
  }
}

TEST(RealBasis, OrthonormalByMonteCarlo) {
  const RealCoordinateSystem rc(2, 0, 1, Grading::max);
  const std::size_t s = rc.size();
  const auto pts = sphere_mc::sample_omega(2, 200000, 31);
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(Eigen::Index(s), Eigen::Index(s));
  std::vector<double> row(s);
  for (const auto& p : pts) {
    rc.eval_all(p.coords(), row);
    const Eigen::Map<Eigen::VectorXd> v(row.data(), Eigen::Index(s));
    G += v * v.transpose();
  }
  G *= omega_d(2) / double(pts.size());
  EXPECT_LT((G - Eigen::MatrixXd::Identity(Eigen::Index(s), Eigen::Index(s))).cwiseAbs().maxCoeff(), 0.05);
}

TEST(LevyMean, IdentityParsevalIsOne) {
  for (auto [M1, M2] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{-1, 2}}) {
    const auto prob = make_levy_problem(2, M1, M2, MultiplierFamily::identity(), 2.0);
    EXPECT_NEAR(levy_mean_parseval(prob), 1.0, 1e-15);
    const auto est = levy_mean_mc(prob, 100, 0, 0);
    EXPECT_NEAR(est.value, 1.0, 1e-15);
    EXPECT_EQ(est.std_error, 0.0);
  }
}

TEST(LevyMean, ExpParsevalClosedForm) {
  const auto prob = make_levy_problem(2, 0, 1, MultiplierFamily::exp_analytic(1, 1), 2.0);
  EXPECT_EQ(prob.s, 7u);
  EXPECT_NEAR(levy_mean_parseval(prob), std::exp(-1.0), 1e-15);
}

TEST(LevyMean, ParsevalAndSampledPathsAgree) {
  const auto prob = make_levy_problem(2, 1, 2, MultiplierFamily::exp_analytic(1, 1), 2.0);
  const auto est = levy_mean_mc(prob, 400, 4000, 2);
  EXPECT_GT(est.std_error, 0.0);
  EXPECT_LT(std::abs(est.value - levy_mean_parseval(prob)), 3.0 * est.std_error);
}

TEST(LevyMean, IdentityOneNormExceedsCaseCLowerBound) {
  const auto prob = make_levy_problem(2, 0, 1, MultiplierFamily::identity(), 1.0);
  const auto est = levy_mean_mc(prob, 300, 5000, 4);
  EXPECT_NEAR(est.value, 3.5, 0.3);
  const auto b = levy_bounds(prob);
  EXPECT_EQ(b.which, LevyCase::c);
  EXPECT_NEAR(b.lower, std::sqrt(omega_d(2)) / 2.0, 1e-12);
  EXPECT_NEAR(b.lower, M_PI / std::sqrt(2.0), 1e-14);
  EXPECT_GT(est.value, b.lower);
}

TEST(LevyMean, Preconditions) {
  const auto p4 = make_levy_problem(2, 0, 1, MultiplierFamily::identity(), 4.0);
  EXPECT_THROW(levy_mean_mc(p4, 10, 0, 0), ArgumentError);
  EXPECT_THROW(levy_mean_mc(p4, 10, 999, 0), ArgumentError);
  EXPECT_THROW(make_levy_problem(2, 2, 1, MultiplierFamily::identity(), 2.0), ArgumentError);
  EXPECT_THROW(make_levy_problem(2, 0, 1, MultiplierFamily::identity(), 0.5), ArgumentError);
}

TEST(LevyMean, DeterministicForSeed) {
  const auto prob = make_levy_problem(2, 0, 1, MultiplierFamily::sobolev(1, 2), 4.0);
  const auto a = levy_mean_mc(prob, 50, 2000, 9);
  const auto b = levy_mean_mc(prob, 50, 2000, 9);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.std_error, b.std_error);
}

TEST(Bounds, CaseDExample) {
  const auto b = levy_bounds(make_levy_problem(2, 0, 1, MultiplierFamily::exp_analytic(1, 1), 2.0));
  EXPECT_EQ(b.which, LevyCase::d);
  EXPECT_NEAR(b.lower, std::exp(-1.0), 1e-15);
  ASSERT_TRUE(b.upper.has_value());
  EXPECT_NEAR(*b.upper, 1.0, 1e-15);
  EXPECT_FALSE(b.inconsistent);
}

TEST(Bounds, CaseCIdentityIsFlaggedInconsistent) {
  const auto b = levy_bounds(make_levy_problem(2, 0, 1, MultiplierFamily::identity(), 1.0));
  EXPECT_EQ(b.which, LevyCase::c);
  ASSERT_TRUE(b.upper.has_value());
  EXPECT_NEAR(*b.upper, 1.0, 1e-15);
  EXPECT_TRUE(b.inconsistent);
}

TEST(Bounds, CaseAHasStructuralFactorOnly) {
  const auto prob = make_levy_problem(2, 1, 3, MultiplierFamily::sobolev(1, 2), 4.0);
  const auto b = levy_bounds(prob);
  EXPECT_EQ(b.which, LevyCase::a);
  EXPECT_FALSE(b.upper.has_value());
  EXPECT_GT(b.lower, 0.0);
  const double s = double(prob.s);
  const double want = std::pow(4.0, 0.5) * std::pow(omega_d(2), 0.25 - 0.5) * std::sqrt(b.sum_upper / s);
  EXPECT_NEAR(b.structural_factor, want, 1e-12 * want);
  EXPECT_EQ(levy_bounds(make_levy_problem(2, 1, 3, MultiplierFamily::sobolev(1, 2), INFINITY)).which, LevyCase::b);
}

TEST(Bounds, IncreasingMultiplierUsesPermutedBounds) {
  const auto up = MultiplierFamily::from_table({{0, 0.1}, {1, 0.2}, {2, 0.4}, {3, 0.8}});
  const auto b = levy_bounds(make_levy_problem(2, 1, 3, up, 2.0));
  EXPECT_TRUE(b.permuted);
  ASSERT_TRUE(b.upper.has_value());
  EXPECT_LE(b.lower, *b.upper);
}

TEST(Bounds, LowerWindowMustStartAtZero) {
  EXPECT_THROW(levy_bounds(make_levy_problem(2, -1, 1, MultiplierFamily::identity(), 2.0)), ArgumentError);
}

TEST(Nikolskii, ConstantPolynomial) {
  const RealCoordinateSystem rc(2, -1, 1, Grading::max);
  std::vector<double> c(rc.size(), 0.0);
  for (std::size_t k = 0; k < rc.size(); ++k) {
    if (rc.functions()[k].level == 0) c[k] = 1.0;
  }
  const auto r = nikolskii_ratios(rc, c, 2.0, 2000, 1);
  EXPECT_NEAR(r.sup_ratio, 1.0 / std::sqrt(double(rc.size())), 1e-12);
  EXPECT_NEAR(r.p_ratio, 1.0, 1e-12);
}

TEST(Nikolskii, RandomDegreeOnePolynomialsAtTwo) {
  const auto rep = nikolskii_check(2, 0, 1, 2.0, 1000, 0, 2000);
  EXPECT_EQ(rep.sup_violations, 0);
  EXPECT_EQ(rep.p_violations, 0);
  EXPECT_NEAR(rep.worst_p_ratio, 1.0, 1e-12);
}

// Re z_1 has sup 1 and L^4 norm (omega/8)^{1/4}, so the sup bound with exponent 1/p is
// exceeded by the factor (8/7)^{1/4} once p = 4 on a window of 7 functions.
TEST(Nikolskii, SupBoundAtFourFailsForRealPartOfFirstCoordinate) {
  const RealCoordinateSystem rc(2, 0, 1, Grading::max);
  ASSERT_EQ(rc.size(), 7u);
  const auto c = coordinates_of(rc, [](const sphere_mc::SpherePoint& z) { return z[0].real(); });
  const auto r = nikolskii_ratios(rc, c, 4.0, 400000, 5);
  EXPECT_NEAR(r.sup_norm, 1.0, 1e-6);
  EXPECT_NEAR(r.p_norm, std::pow(omega_d(2) / 8.0, 0.25), 3.0 * r.p_norm_se);
  EXPECT_NEAR(r.sup_ratio, std::pow(8.0 / 7.0, 0.25), 4.0 * r.sup_ratio_se + 1e-6);
  EXPECT_GT(r.sup_ratio, 1.0 + 3.0 * r.sup_ratio_se);
}
