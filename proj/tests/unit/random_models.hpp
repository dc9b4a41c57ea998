#pragma once

#include <random>

#include "bogo/core.hpp"
#include "bogo/fock.hpp"
#include "bogo/symplectic.hpp"

namespace testing_util {

using bogo::CMatrix;
using bogo::Complex;
using bogo::CVector;

inline CMatrix random_complex(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index k = 0; k < c; ++k) m(i, k) = Complex{g(rng), g(rng)} * scale;
  return m;
}

inline CVector random_vector(std::mt19937_64& rng, Eigen::Index d, double norm) {
  CVector f = random_complex(rng, d, 1);
  return f * (norm / f.norm());
}

inline CMatrix random_hermitian(std::mt19937_64& rng, Eigen::Index d, double scale = 1.0) {
  const CMatrix a = random_complex(rng, d, d, scale);
  return 0.5 * (a + a.adjoint());
}

inline CMatrix random_symmetric(std::mt19937_64& rng, Eigen::Index d, double scale = 1.0) {
  const CMatrix a = random_complex(rng, d, d, scale);
  return 0.5 * (a + a.transpose());
}

/// Hermitian with spectrum in [lo, hi].
inline CMatrix random_positive(std::mt19937_64& rng, Eigen::Index d, double lo, double hi) {
  Eigen::HouseholderQR<CMatrix> qr(random_complex(rng, d, d));
  const CMatrix u = qr.householderQ();
  std::uniform_real_distribution<double> w(lo, hi);
  CVector lam(d);
  for (Eigen::Index i = 0; i < d; ++i) lam(i) = w(rng);
  return u * lam.asDiagonal() * u.adjoint();
}

/// Symmetric matrix with operator norm exactly `norm`.
inline CMatrix random_symmetric_with_norm(std::mt19937_64& rng, Eigen::Index d, double norm) {
  const CMatrix s = random_symmetric(rng, d);
  return s * (norm / bogo::operator_norm(s));
}

/// Random generator with h = h0 + shift and ‖v‖ ≤ ratio·λ_min(h), so the classical symbol is positive.
inline bogo::Generator random_positive_generator(std::mt19937_64& rng, Eigen::Index d, double lo,
                                                 double hi, double ratio) {
  const CMatrix h = random_positive(rng, d, lo, hi);
  const CMatrix v = random_symmetric_with_norm(rng, d, ratio * lo);
  return bogo::Generator(h, v);
}

/// Normalized random vector supported on total particle number ≤ sector.
inline CVector random_state(std::mt19937_64& rng, const bogo::FockSpace& s, int sector) {
  CVector psi = CVector::Zero(s.dim());
  const Eigen::Index n = s.sector_dim(sector);
  psi.head(n) = random_complex(rng, n, 1);
  return psi / psi.norm();
}

}  // namespace testing_util
