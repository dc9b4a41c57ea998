#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "bogo/infimum.hpp"
#include "bogo/oracle.hpp"
#include "random_models.hpp"

using namespace bogo;
using testing_util::random_positive_generator;

namespace {

CMatrix m1(Complex x) { return CMatrix::Constant(1, 1, x); }

}  // namespace

TEST(SigmaBetaSq, Examples) {
  std::mt19937_64 rng(61);
  const CMatrix h = testing_util::random_hermitian(rng, 2);
  const CMatrix z = sigma_beta_sq(Generator(h, CMatrix::Zero(2, 2)));
  EXPECT_LE((z.topLeftCorner(2, 2) - 0.25 * h.conjugate() * h.conjugate()).norm(), 1e-15);
  EXPECT_LE((z.bottomRightCorner(2, 2) - 0.25 * h * h).norm(), 1e-15);
  EXPECT_EQ(z.topRightCorner(2, 2).norm(), 0.0);
  EXPECT_EQ(z.bottomLeftCorner(2, 2).norm(), 0.0);

  const CMatrix a = sigma_beta_sq(Generator(m1(5.0), m1(3.0)));
  EXPECT_LE((a - 4.0 * CMatrix::Identity(2, 2)).norm(), 1e-15);
  EXPECT_EQ(sigma_beta_sq(Generator(m1(1.0), m1(1.0))).norm(), 0.0);
}

TEST(InfHI, FreeIsZero) {
  std::mt19937_64 rng(62);
  const InfimumReport r = inf_HI(Generator(testing_util::random_positive(rng, 3, 0.1, 2.0), CMatrix::Zero(3, 3)));
  EXPECT_NEAR(r.inf_HI, 0.0, 1e-13);
  EXPECT_NEAR(r.cII_shift, 0.0, 1e-13);
}

TEST(InfHI, Squeezer53) {
  const InfimumReport r = inf_HI(Generator(m1(5.0), m1(3.0)));
  EXPECT_NEAR(r.inf_HI, -0.5, 1e-14);
  EXPECT_NEAR(r.cII_shift, 0.5, 1e-14);
  EXPECT_NEAR(r.symbol_min, 2.0, 1e-14);
  ASSERT_EQ(r.symplectic_eigen_products.size(), 1u);
  EXPECT_NEAR(r.symplectic_eigen_products[0], 2.0, 1e-14);
  EXPECT_FALSE(r.boundary);
}

TEST(InfHI, BoundarySymbolFlagged) {
  const InfimumReport r = inf_HI(Generator(m1(1.0), m1(1.0)));
  EXPECT_TRUE(r.boundary);
  EXPECT_NEAR(r.inf_HI, -0.5, 1e-12);
}

TEST(InfHI, NegativeSymbolRejected) {
  EXPECT_THROW(inf_HI(Generator(m1(0.0), m1(1.0))), UnboundedBelowError);
  CMatrix h = CMatrix::Identity(2, 2);
  h(1, 1) = -0.5;
  EXPECT_THROW(inf_HI(Generator(h, CMatrix::Zero(2, 2))), UnboundedBelowError);
}

TEST(InfHI, ProductsSumToTraceFormula) {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index d = 1 + trial % 4;
    const Generator g = random_positive_generator(rng, d, 0.5, 3.0, 0.8);
    const InfimumReport r = inf_HI(g);
    const double sum = std::accumulate(r.symplectic_eigen_products.begin(), r.symplectic_eigen_products.end(), 0.0);
    EXPECT_NEAR(r.inf_HI, sum - 0.5 * g.h.trace().real(), 1e-10);
    EXPECT_NEAR(r.cII_shift, -r.inf_HI, 0.0);
  }
}

TEST(InfHI, AgreesWithWilliamsonRoute) {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index d = 1 + trial % 4;
    const Generator g = random_positive_generator(rng, d, 0.5, 3.0, 0.9);
    const std::vector<double> w = symplectic_eigenvalues(g);
    const double williamson = 0.5 * std::accumulate(w.begin(), w.end(), 0.0) - 0.5 * g.h.trace().real();
    EXPECT_NEAR(inf_HI(g).inf_HI, williamson, 1e-9);
  }
}

TEST(InfHI, NonPositive) {
  std::mt19937_64 rng(65);
  for (int trial = 0; trial < 20; ++trial) {
    const Generator g = random_positive_generator(rng, 1 + trial % 3, 0.5, 3.0, 0.9);
    EXPECT_LE(inf_HI(g).inf_HI, 1e-12);
  }
}

TEST(InfHI, ScaleCovariance) {
  std::mt19937_64 rng(66);
  const Generator g = random_positive_generator(rng, 3, 0.5, 2.0, 0.7);
  const double base = inf_HI(g).inf_HI;
  for (double c : {0.1, 2.0, 37.0}) {
    EXPECT_NEAR(inf_HI(Generator(c * g.h, c * g.v)).inf_HI, c * base, 1e-10 * c);
  }
}

TEST(InfHI, MatchesBruteForceSingleMode) {
  const ConvergenceSeries s = brute_inf(Generator(m1(5.0), m1(3.0)), {20, 40, 60});
  EXPECT_NEAR(s.values.back(), -0.5, 1e-6);
  EXPECT_TRUE(s.monotone);
}

TEST(InfHI, MatchesBruteForceTwoModes) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 3; ++trial) {
    const Generator g = random_positive_generator(rng, 2, 1.0, 2.0, 0.5);
    const ConvergenceSeries s = brute_inf(g, {20, 30, 40});
    EXPECT_NEAR(s.extrapolated, inf_HI(g).inf_HI, 1e-4);
  }
}

TEST(InfHI, VariationalAndMonotoneInCutoff) {
  std::mt19937_64 rng(68);
  for (int d = 1; d <= 3; ++d) {
    const Generator g = random_positive_generator(rng, d, 0.8, 2.0, 0.6);
    const double exact = inf_HI(g).inf_HI;
    const std::vector<int> cutoffs = d == 3 ? std::vector<int>{4, 6, 8, 10} : std::vector<int>{6, 10, 14, 18};
    const ConvergenceSeries s = brute_inf(g, cutoffs);
    EXPECT_TRUE(s.monotone) << "d=" << d;
    double prev_gap = 1e300;
    for (double x : s.values) {
      EXPECT_GE(x, exact - 1e-10) << "d=" << d;
      EXPECT_LE(x - exact, prev_gap + 1e-12) << "d=" << d;
      prev_gap = x - exact;
    }
  }
}
