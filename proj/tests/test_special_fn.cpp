#include "cxwidths/errors.hpp"
#include "cxwidths/special_fn.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace cxw;
using namespace cxw::special_fn;

TEST(Jacobi, DegreeZeroIsOne) { EXPECT_EQ(jacobi_eval({0, 1.5, -0.5}, 0.7), 1.0); }

TEST(Jacobi, DegreeOneClosedForm) { EXPECT_NEAR(jacobi_eval({1, 0.0, 0.0}, 0.5), 0.5, 1e-15); }

TEST(Jacobi, ValueAtOneIsBinomial) {
  EXPECT_NEAR(jacobi_eval({3, 2.0, 1.0}, 1.0), 10.0, 1e-12);
  for (int k = 0; k <= 20; ++k) {
    for (int a = 0; a <= 4; ++a) {
      for (int b = 0; b <= 4; ++b) {
        const double want = oracle::pascal_binom(k + a, k).convert_to<double>();
        EXPECT_NEAR(jacobi_eval({k, double(a), double(b)}, 1.0), want, 1e-12 * want) << k << " " << a << " " << b;
        EXPECT_NEAR(jacobi_at_one(k, a), want, 1e-12 * want);
      }
    }
  }
}

TEST(Jacobi, MatchesClosedFormsUpToDegreeThree) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> X(-1.0, 1.0), P(-0.9, 4.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = P(rng), b = P(rng), x = X(rng);
    for (int k = 0; k <= 3; ++k) {
      EXPECT_NEAR(jacobi_eval({k, a, b}, x), oracle::jacobi_closed(k, a, b, x), 1e-13);
    }
  }
}

TEST(Jacobi, ClampsRoundOffAndRejectsBeyond) {
  EXPECT_NEAR(jacobi_eval({2, 1.0, 0.0}, 1.0 + 5e-13), jacobi_eval({2, 1.0, 0.0}, 1.0), 1e-12);
  EXPECT_THROW(jacobi_eval({2, 1.0, 0.0}, 1.0 + 1e-9), ArgumentError);
  EXPECT_THROW(jacobi_eval({-1, 0.0, 0.0}, 0.0), ArgumentError);
  EXPECT_THROW(jacobi_eval({1, 0.0, 0.0}, NAN), ArgumentError);
}

TEST(Gegenbauer, SmallCases) {
  EXPECT_EQ(gegenbauer_eval(0, 1.0, -0.3), 1.0);
  EXPECT_NEAR(gegenbauer_eval(1, 1.0, 0.5), 1.0, 1e-15);
  EXPECT_NEAR(gegenbauer_eval(3, 1.0, 1.0), 4.0, 1e-13);
  EXPECT_THROW(gegenbauer_eval(2, 0.0, 0.1), ArgumentError);
  EXPECT_THROW(gegenbauer_eval(2, -1.0, 0.1), ArgumentError);
}

TEST(Gegenbauer, ChebyshevSecondKindAtLambdaOne) {
  // C_k^1(cos t) = sin((k+1)t)/sin t
  for (int k = 0; k <= 12; ++k) {
    for (double t : {0.3, 1.1, 2.5}) {
      EXPECT_NEAR(gegenbauer_eval(k, 1.0, std::cos(t)), std::sin((k + 1) * t) / std::sin(t), 1e-12);
    }
  }
}

TEST(DiskPoly, Examples) {
  using c = std::complex<double>;
  EXPECT_NEAR(std::abs(disk_poly_eval({0, 0, 0, c(0.3, 0.4)}) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(disk_poly_eval({1, 0, 0, c(0.5, 0.0)}) - c(0.5, 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(disk_poly_eval({1, 1, 0, c(0.6, 0.0)}) - c(-0.28, 0.0)), 0.0, 1e-15);
  EXPECT_THROW(disk_poly_eval({1, 1, -1, c(0.1, 0.0)}), ArgumentError);
}

TEST(DiskPoly, BoundedByOneAndConjugationSymmetric) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double rad = std::sqrt(U(rng)), ang = 2 * M_PI * U(rng);
    const std::complex<double> z = std::polar(rad, ang);
    for (int alpha = 0; alpha <= 2; ++alpha) {
      for (int m = 0; m <= 8; ++m) {
        for (int n = 0; n <= 8; ++n) {
          const auto v = disk_poly_eval({m, n, alpha, z});
          EXPECT_LE(std::abs(v), 1.0 + 1e-10);
          const auto vc = disk_poly_eval({m, n, alpha, std::conj(z)});
          const auto vs = disk_poly_eval({n, m, alpha, z});
          EXPECT_NEAR(std::abs(vc - std::conj(v)), 0.0, 1e-12);
          EXPECT_NEAR(std::abs(vs - std::conj(v)), 0.0, 1e-12);
        }
      }
    }
  }
}

TEST(DiskPoly, EqualsOneAtOne) {
  for (int alpha = 0; alpha <= 3; ++alpha) {
    for (int m = 0; m <= 10; ++m) {
      for (int n = 0; n <= 10; ++n) {
        EXPECT_NEAR(std::abs(disk_poly_eval({m, n, alpha, 1.0}) - 1.0), 0.0, 1e-12);
      }
    }
  }
}
