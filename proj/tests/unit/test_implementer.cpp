#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bogo/implementer.hpp"
#include "bogo/oracle.hpp"
#include "random_models.hpp"

using namespace bogo;
using testing_util::random_hermitian;
using testing_util::random_symmetric;
using testing_util::random_symmetric_with_norm;

namespace {

CMatrix m1(Complex x) { return CMatrix::Constant(1, 1, x); }

const Generator kSq53(m1(5.0), m1(3.0));

double unitarity_residual(const FockOperator& u, int sector) {
  const CMatrix& m = u.matrix();
  const CMatrix r = m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols());
  return sector_norm(*u.space(), r, sector);
}

// P = (1 − KK̄)^{-1/2}, Q = K̄P, so that conj(QP⁻¹) = K.
SymplecticMap map_with_K(const CMatrix& k) {
  const Eigen::Index d = k.rows();
  const CMatrix m = CMatrix::Identity(d, d) - k * k.conjugate();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  const CMatrix p = es.operatorInverseSqrt();
  return SymplecticMap{p, k.conjugate() * p, 0.0};
}

}  // namespace

TEST(ExpQuad, ZeroIsIdentity) {
  const auto s = build_space(2, 6);
  const CMatrix id = CMatrix::Identity(s->dim(), s->dim());
  EXPECT_EQ((exp_quad(s, CMatrix::Zero(2, 2), QuadKind::raise).matrix() - id).norm(), 0.0);
  EXPECT_EQ((exp_quad(s, CMatrix::Zero(2, 2), QuadKind::lower).matrix() - id).norm(), 0.0);
}

TEST(ExpQuad, FirstSeriesTerm) {
  const auto s = build_space(1, 10);
  for (double k : {0.2, 0.5, 0.9}) {
    const CVector psi = exp_quad_vacuum(s, m1(k)).amplitudes;
    EXPECT_NEAR(std::abs(psi(2) + k / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_EQ(psi(0), Complex(1.0, 0.0));
    EXPECT_EQ(psi(1), Complex(0.0, 0.0));
  }
}

TEST(ExpQuad, VacuumColumnMatchesOperator) {
  std::mt19937_64 rng(41);
  const auto s = build_space(2, 8);
  const CMatrix k = random_symmetric_with_norm(rng, 2, 0.4);
  const CVector a = exp_quad_vacuum(s, k).amplitudes;
  const CVector b = exp_quad(s, k, QuadKind::raise).matrix().col(0);
  EXPECT_LE((a - b).norm(), 1e-14);
}

TEST(ExpQuad, LowerIsAdjointOfRaise) {
  std::mt19937_64 rng(42);
  const auto s = build_space(2, 8);
  const CMatrix k = random_symmetric_with_norm(rng, 2, 0.4);
  const CMatrix up = exp_quad(s, k, QuadKind::raise).matrix();
  const CMatrix down = exp_quad(s, k, QuadKind::lower).matrix();
  EXPECT_LE((up.adjoint() - down).norm(), 1e-14);
}

TEST(ExpQuad, NormAtLeastOneRejected) {
  const auto s = build_space(1, 6);
  EXPECT_THROW(exp_quad(s, m1(1.0), QuadKind::raise), DomainError);
  EXPECT_THROW(exp_quad_vacuum(s, m1(1.2)), DomainError);
}

TEST(ExpQuad, StrongLimitToIdentity) {
  std::mt19937_64 rng(43);
  const auto s = build_space(2, 10);
  const CVector psi = testing_util::random_state(rng, *s, 4);
  const CMatrix dir = random_symmetric(rng, 2);
  double prev = 1e300;
  for (double scale : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const CMatrix m = dir * (scale / dir.norm());
    const double r = (exp_quad(s, m, QuadKind::raise).matrix() * psi - psi).norm();
    EXPECT_LT(r, prev);
    prev = r;
  }
  EXPECT_LT(prev, 1e-3);
}

TEST(UNat, IdentityMap) {
  const auto s = build_space(2, 6);
  const ImplementerResult r = u_nat(s, SymplecticMap::identity(2));
  EXPECT_LE((r.op.matrix() - CMatrix::Identity(s->dim(), s->dim())).norm(), 1e-14);
  EXPECT_EQ(r.vacuum_overlap, Complex(1.0, 0.0));
}

TEST(UNat, SqueezerVacuumOverlap) {
  const auto s = build_space(1, 40);
  const ImplementerResult r = u_nat(s, SymplecticMap{m1(Complex(0, 1.25)), m1(Complex(0, 0.75)), 0.0});
  EXPECT_NEAR(std::abs(r.vacuum_overlap - 2.0 / std::sqrt(5.0)), 0.0, 1e-12);
}

TEST(UNat, FreeEvolutionIsGamma) {
  std::mt19937_64 rng(44);
  const auto s = build_space(2, 6);
  const CMatrix h = random_hermitian(rng, 2);
  for (double t : {0.3, 1.7}) {
    const ImplementerResult r = u_nat(s, evolve(Generator(h, CMatrix::Zero(2, 2)), t));
    EXPECT_LE((r.op.matrix() - gamma(s, expm(kI * t * h)).matrix()).norm(), 1e-12);
  }
}

TEST(UNat, VacuumOverlapEqualsDetQuarter) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index d = 1 + trial % 2;
    const Generator g(random_hermitian(rng, d), random_symmetric(rng, d));
    const SymplecticMap map = evolve(g, 0.3);
    const auto s = build_space(static_cast<int>(d), 12);
    const ImplementerResult r = u_nat(s, map);
    const double expect = det_quarter(kl_operators(map).K);
    EXPECT_NEAR(std::abs(r.vacuum_overlap - expect), 0.0, 1e-12);
    EXPECT_GT(r.vacuum_overlap.real(), 0.0);
  }
}

TEST(UNat, HalfSectorUnitarityDecreasesWithCutoff) {
  for (double k : {0.1, 0.2}) {
    const SymplecticMap map = map_with_K(CMatrix::Constant(1, 1, k));
    double prev = 1e300;
    for (int nmax = 20; nmax <= 60; nmax += 4) {
      const auto s = build_space(1, nmax);
      const double r = unitarity_residual(u_nat(s, map).op, nmax / 2);
      EXPECT_LT(r, prev) << "K=" << k << " Nmax=" << nmax;
      prev = r;
    }
  }
}

TEST(UNat, FixedSectorUnitarityConverges) {
  const SymplecticMap map = map_with_K(CMatrix::Constant(1, 1, 0.6));
  double prev = 1e300;
  for (int nmax : {20, 40, 60, 80}) {
    const auto s = build_space(1, nmax);
    const double r = unitarity_residual(u_nat(s, map).op, 10);
    EXPECT_LT(r, prev) << "Nmax=" << nmax;
    prev = r;
  }
  EXPECT_LT(prev, 1e-3);
}

TEST(UNat, HalfSectorUnitarityAtSmallK) {
  std::mt19937_64 rng(46);
  for (Eigen::Index d : {1, 2}) {
    const CMatrix k = random_symmetric_with_norm(rng, d, 0.05);
    const SymplecticMap map = map_with_K(k);
    ASSERT_LE(check_symplectic(map), 1e-12);
    ASSERT_LE((kl_operators(map).K - k).norm(), 1e-12);
    const auto s = build_space(static_cast<int>(d), 40);
    EXPECT_LE(unitarity_residual(u_nat(s, map).op, 20), 1e-6) << "d=" << d;
  }
}

TEST(Type1Phase, FreeIsOne) {
  std::mt19937_64 rng(47);
  const Generator g(random_hermitian(rng, 2), CMatrix::Zero(2, 2));
  for (double t : {0.1, 1.0, 5.0}) EXPECT_EQ(type1_phase(g, t), Complex(1.0, 0.0));
}

TEST(Type1Phase, SquareTimesDeterminantIsOne) {
  const Complex ph = type1_phase(kSq53, M_PI / 8);
  EXPECT_NEAR(std::abs(ph * ph * type1_det(kSq53, M_PI / 8) - 1.0), 0.0, 1e-8);

  std::mt19937_64 rng(48);
  for (int trial = 0; trial < 5; ++trial) {
    const Generator g(random_hermitian(rng, 2), random_symmetric(rng, 2));
    const double t = 0.2 + 0.4 * trial;
    const Complex p = type1_phase(g, t);
    EXPECT_NEAR(std::abs(p * p * type1_det(g, t) - 1.0), 0.0, 1e-8);
  }
}

TEST(Type1Phase, ContinuousAlongT) {
  const Generator g(m1(0.0), m1(1.0));
  Complex prev = type1_phase(g, 0.0);
  double worst = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const Complex cur = type1_phase(g, 0.01 * k);
    worst = std::max(worst, std::abs(cur - prev) / std::abs(prev));
    prev = cur;
  }
  EXPECT_LT(worst, 0.05);
}

TEST(UType1, TimeZeroIsIdentity) {
  const auto s = build_space(1, 10);
  const ImplementerResult r = u_type1(s, kSq53, 0.0);
  EXPECT_LE((r.op.matrix() - CMatrix::Identity(s->dim(), s->dim())).norm(), 1e-14);
  EXPECT_NEAR(std::abs(r.phase - 1.0), 0.0, 1e-15);
}

TEST(UType1, FreeIsGamma) {
  std::mt19937_64 rng(49);
  const auto s = build_space(2, 6);
  const Generator g(random_hermitian(rng, 2), CMatrix::Zero(2, 2));
  const ImplementerResult r = u_type1(s, g, 0.8);
  EXPECT_LE((r.op.matrix() - gamma(s, expm(0.8 * kI * g.h)).matrix()).norm(), 1e-12);
  EXPECT_EQ(r.phase, Complex(1.0, 0.0));
}

TEST(UType1, GroupLaw) {
  const auto s = build_space(1, 40);
  const auto work = build_space(1, 120);
  const CMatrix a = u_type1(work, kSq53, 0.1).op.matrix();
  const FockOperator prod(work, a * a, u_type1(work, kSq53, 0.1).op.grading());
  const CMatrix lhs = project(prod, s).matrix();
  const CMatrix rhs = u_type1(s, kSq53, 0.2).op.matrix();
  EXPECT_LE(sector_norm(*s, lhs - rhs, 30), 1e-6);
}

TEST(Cocycle, TraceIdentity) {
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 5; ++trial) {
    const Generator g(random_hermitian(rng, 2), random_symmetric(rng, 2));
    const double s = 0.1 + 0.3 * trial;
    const KLOperators kl = kl_operators(evolve(g, s));
    const Complex lhs = type1_integrand(g, s);
    const Complex rhs = -(g.v * kl.L.conjugate()).trace();
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
  }
}

TEST(Cocycle, RoutesAgree) {
  const auto s = build_space(1, 8);
  for (double t : {0.1, M_PI / 8, 0.7}) {
    const Complex a = u_type1(s, kSq53, t).phase;
    EXPECT_NEAR(std::abs(a - cocycle_from_L(kSq53, t)), 0.0, 1e-8);
    EXPECT_NEAR(std::abs(a), 1.0, 1e-10);
  }
  std::mt19937_64 rng(51);
  const auto s2 = build_space(2, 4);
  for (int trial = 0; trial < 4; ++trial) {
    const Generator g(random_hermitian(rng, 2), random_symmetric(rng, 2));
    const double t = 0.3 + 0.5 * trial;
    EXPECT_NEAR(std::abs(u_type1(s2, g, t).phase - cocycle_from_L(g, t)), 0.0, 1e-8);
  }
}

TEST(UType1, RelatedToUNatByCocycle) {
  const auto s = build_space(1, 16);
  const double t = 0.3;
  const ImplementerResult a = u_type1(s, kSq53, t);
  const ImplementerResult b = u_nat(s, evolve(kSq53, t));
  EXPECT_LE((a.op.matrix() - a.phase * b.op.matrix()).norm(), 1e-10 * b.op.matrix().norm());
}

TEST(Intertwine, Identity) {
  const auto s = build_space(2, 10);
  const FockOperator id = FockOperator::identity(s);
  EXPECT_NEAR(intertwine_residual(s, id, SymplecticMap::identity(2), CVector::Constant(2, 0.3), 5), 0.0, 1e-14);
}

TEST(Intertwine, FreeEvolution) {
  std::mt19937_64 rng(52);
  for (Eigen::Index d : {1, 2}) {
    const auto s = build_space(static_cast<int>(d), 30);
    const CMatrix h = random_hermitian(rng, d);
    const double t = 0.9;
    const FockOperator u = gamma(s, expm(kI * t * h));
    const SymplecticMap map = evolve(Generator(h, CMatrix::Zero(d, d)), t);
    const CVector f = testing_util::random_vector(rng, d, 0.5);
    EXPECT_LE(intertwine_residual(s, u, map, f, 10), 1e-6) << "d=" << d;
  }
}

TEST(Intertwine, Squeezer) {
  const auto s = build_space(1, 40);
  const SymplecticMap map = evolve(kSq53, 0.1);
  const double r = intertwine_residual(s, u_nat(s, map).op, map, CVector::Constant(1, 0.3), 10);
  EXPECT_LE(r, 1e-4);
  const auto big = build_space(1, 60);
  const double r12 = intertwine_residual(big, u_nat(big, map).op, map, CVector::Constant(1, 0.3), 12);
  EXPECT_LE(r12, 1e-4);
}

TEST(ExpDetOverlap, Examples) {
  const auto s1 = build_space(1, 40);
  const OverlapPair z = exp_det_overlap(s1, m1(0.0), m1(0.0));
  EXPECT_EQ(z.lhs, Complex(1.0, 0.0));
  EXPECT_NEAR(std::abs(z.rhs - 1.0), 0.0, 1e-15);

  const OverlapPair h = exp_det_overlap(s1, m1(0.5), m1(0.5));
  EXPECT_NEAR(std::abs(h.rhs - 1.0 / std::sqrt(0.75)), 0.0, 1e-14);
  EXPECT_LE(h.residual(), 1e-6);

  std::mt19937_64 rng(53);
  const auto s2 = build_space(2, 30);
  const OverlapPair r =
      exp_det_overlap(s2, random_symmetric_with_norm(rng, 2, 0.3), random_symmetric_with_norm(rng, 2, 0.3));
  EXPECT_LE(r.residual(), 1e-8);
  EXPECT_THROW(exp_det_overlap(s1, m1(1.0), m1(0.1)), DomainError);
}
