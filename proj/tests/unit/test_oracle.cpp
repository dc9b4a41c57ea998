#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bogo/oracle.hpp"
#include "random_models.hpp"

using namespace bogo;

namespace {

CMatrix m1(Complex x) { return CMatrix::Constant(1, 1, x); }

const Generator kSq53(m1(5.0), m1(3.0));

}  // namespace

TEST(BruteInf, FreeIsZero) {
  std::mt19937_64 rng(81);
  const Generator g(testing_util::random_positive(rng, 2, 0.2, 2.0), CMatrix::Zero(2, 2));
  const ConvergenceSeries s = brute_inf(g, {4, 8, 12});
  for (double x : s.values) EXPECT_NEAR(x, 0.0, 1e-12);
  EXPECT_NEAR(s.extrapolated, 0.0, 1e-12);
}

TEST(BruteInf, Squeezer53) {
  const ConvergenceSeries s = brute_inf(kSq53, {20, 40, 60});
  EXPECT_NEAR(s.extrapolated, -0.5, 1e-6);
  EXPECT_TRUE(s.monotone);
}

TEST(BruteInf, UnboundedWitness) {
  const ConvergenceSeries s = brute_inf(Generator(m1(0.0), m1(1.0)), {20, 40, 60, 80});
  EXPECT_TRUE(s.monotone);
  std::vector<double> slopes;
  for (std::size_t k = 1; k < s.values.size(); ++k) slopes.push_back((s.values[k] - s.values[k - 1]) / 20.0);
  for (double sl : slopes) EXPECT_LT(sl, -0.1);
  EXPECT_NEAR(slopes.back() / slopes.front(), 1.0, 0.1);
}

TEST(BruteInf, InputChecks) {
  EXPECT_THROW(brute_inf(kSq53, {20, 10}), InputError);
  EXPECT_THROW(brute_inf(kSq53, {}), InputError);
  EXPECT_THROW(brute_inf(Generator(CMatrix::Identity(4, 4), CMatrix::Zero(4, 4)), {2}), InputError);
}

TEST(Aitken, GeometricSequence) {
  EXPECT_NEAR(aitken_last3({1.5, 1.25, 1.125}), 1.0, 1e-14);
  EXPECT_EQ(aitken_last3({1.0, 2.0, 1.0}), 1.0);
  EXPECT_EQ(aitken_last3({3.0}), 3.0);
}

TEST(Propagator, TimeZeroAndNumberPhases) {
  const auto s = build_space(2, 5);
  const FockOperator n = number_operator(s);
  EXPECT_LE((propagator(n, 0.0).matrix() - CMatrix::Identity(s->dim(), s->dim())).norm(), 1e-14);
  const CMatrix u = propagator(n, M_PI).matrix();
  for (Eigen::Index k = 0; k < s->dim(); ++k) {
    EXPECT_NEAR(std::abs(u(k, k) - (s->total(k) % 2 == 0 ? 1.0 : -1.0)), 0.0, 1e-13);
  }
  EXPECT_LE((u - CMatrix(u.diagonal().asDiagonal())).norm(), 1e-13);
}

TEST(Propagator, GroupLawAndUnitarity) {
  std::mt19937_64 rng(82);
  const auto s = build_space(2, 8);
  const FockOperator h = hamiltonian_HI(s, Generator(testing_util::random_hermitian(rng, 2),
                                                     testing_util::random_symmetric(rng, 2)));
  const CMatrix a = propagator(h, 0.3).matrix();
  const CMatrix b = propagator(h, 0.45).matrix();
  EXPECT_LE((a * b - propagator(h, 0.75).matrix()).norm(), 1e-10);
  EXPECT_LE((a.adjoint() * a - CMatrix::Identity(s->dim(), s->dim())).norm(), 1e-12);
}

TEST(Propagator, RejectsNonHermitian) {
  const auto s = build_space(1, 4);
  EXPECT_THROW(propagator(ladder(s, CVector::Ones(1)).creation, 1.0), InputError);
}

TEST(Propagator, MatchesImplementer) {
  const auto s = build_space(1, 40);
  for (double t : {0.1, 0.5}) {
    const CMatrix e = propagator_HI(s, kSq53, t, 200).matrix();
    const CMatrix u = u_type1(s, kSq53, t).op.matrix();
    EXPECT_LE(sector_norm(*s, e - u, 10), 1e-5) << "t=" << t;
  }
}

TEST(FiniteDiff, FreeRecoversSecondQuantization) {
  std::mt19937_64 rng(83);
  // quotient error dt²‖dΓ(h)‖³/6
  const auto s = build_space(2, 4);
  CMatrix h = testing_util::random_hermitian(rng, 2);
  h *= 0.4 / operator_norm(h);
  const CMatrix d = finite_diff_generator(s, Generator(h, CMatrix::Zero(2, 2)), 1e-3).matrix();
  EXPECT_LE((d - second_quantize(s, h).matrix()).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(FiniteDiff, SecondOrderConvergence) {
  const auto s = build_space(1, 40);
  const CMatrix hi = hamiltonian_HI(s, kSq53).matrix();
  std::vector<double> err;
  for (double dt : {1e-2, 5e-3, 2.5e-3}) {
    err.push_back(sector_norm(*s, finite_diff_generator(s, kSq53, dt).matrix() - hi, 10));
  }
  EXPECT_NEAR(err[0] / err[1], 4.0, 0.2);
  EXPECT_NEAR(err[1] / err[2], 4.0, 0.2);
}

TEST(FiniteDiff, RandomTwoModeHermitian) {
  std::mt19937_64 rng(84);
  const auto s = build_space(2, 16);
  const Generator g(testing_util::random_hermitian(rng, 2), testing_util::random_symmetric(rng, 2));
  const CMatrix d = finite_diff_generator(s, g, 1e-3).matrix();
  const Eigen::Index n = s->sector_dim(12);
  const CMatrix b = d.topLeftCorner(n, n);
  EXPECT_LE((b - b.adjoint()).norm(), 1e-6);
  EXPECT_THROW(finite_diff_generator(s, g, 0.1), InputError);
}

TEST(Trotter, ConvergesToImplementer) {
  const auto s = build_space(1, 20);
  const CMatrix u = u_type1(s, kSq53, 0.1).op.matrix();
  std::vector<double> err;
  for (int steps : {32, 64, 128, 256}) {
    err.push_back(sector_norm(*s, trotter_propagator(s, kSq53, 0.1, steps, 80).matrix() - u, 8));
  }
  for (std::size_t k = 1; k < err.size(); ++k) EXPECT_NEAR(err[k - 1] / err[k], 2.0, 0.2);
  EXPECT_LT(err.back(), 5e-3);
}
