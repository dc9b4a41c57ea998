#ifndef BOGO_INFIMUM_HPP
#define BOGO_INFIMUM_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "bogo/core.hpp"
#include "bogo/symplectic.hpp"

namespace bogo {

inline constexpr double kSymbolTol = 1e-10;
inline constexpr double kClampTol = 1e-10;

struct InfimumReport {
  double symbol_min = 0.0;
  double inf_HI = 0.0;
  double cII_shift = 0.0;
  std::vector<double> symplectic_eigen_products;
  bool boundary = false;  // symbol_min within tolerance of zero
};

/// −(σβ)² = ¼ [[h̄² − v̄v, h̄v̄ − v̄h], [hv − vh̄, h² − vv̄]].
inline CMatrix sigma_beta_sq(const Generator& gen) {
  require_valid(gen);
  const Eigen::Index d = gen.dim();
  const CMatrix& h = gen.h;
  const CMatrix& v = gen.v;
  const CMatrix hb = h.conjugate();
  const CMatrix vb = v.conjugate();
  CMatrix m(2 * d, 2 * d);
  m.topLeftCorner(d, d) = hb * hb - vb * v;
  m.topRightCorner(d, d) = hb * vb - vb * h;
  m.bottomLeftCorner(d, d) = h * v - v * hb;
  m.bottomRightCorner(d, d) = h * h - v * vb;
  return 0.25 * m;
}

namespace detail {

// Eigenvalues of −(σβ)², sorted ascending by real part. The matrix is similar
// to a PSD one when the symbol is positive but is not Hermitian in general.
inline std::vector<double> sigma_beta_sq_eigen(const Generator& gen) {
  Eigen::ComplexEigenSolver<CMatrix> es(sigma_beta_sq(gen), false);
  std::vector<double> out;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    double x = es.eigenvalues()(k).real();
    if (x < 0.0 && x >= -kClampTol * std::max(1.0, gen.h.norm() * gen.h.norm())) x = 0.0;
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Symplectic eigenvalues of M_sym = [[h, v], [v̄, h̄]], i.e. the positive
/// eigenvalues of diag(1, −1)·M_sym, ascending.
inline std::vector<double> symplectic_eigenvalues(const Generator& gen) {
  require_valid(gen);
  const Eigen::Index d = gen.dim();
  CMatrix m(2 * d, 2 * d);
  m.topLeftCorner(d, d) = gen.h;
  m.topRightCorner(d, d) = gen.v;
  m.bottomLeftCorner(d, d) = -gen.v.conjugate();
  m.bottomRightCorner(d, d) = -gen.h.conjugate();
  Eigen::ComplexEigenSolver<CMatrix> es(m, false);
  std::vector<double> w;
  for (Eigen::Index k = 0; k < 2 * d; ++k) w.push_back(std::abs(es.eigenvalues()(k).real()));
  std::sort(w.begin(), w.end());
  std::vector<double> out;
  for (std::size_t k = 0; k + 1 < w.size(); k += 2) out.push_back(0.5 * (w[k] + w[k + 1]));
  return out;
}

/// inf H_I = ½ Tr √(−(σβ)²) − ½ Tr h.
inline InfimumReport inf_HI(const Generator& gen) {
  require_valid(gen);
  InfimumReport r;
  r.symbol_min = classical_symbol_min(gen);
  const double scale = std::max(1.0, gen.h.norm() + gen.v.norm());
  if (r.symbol_min < -kSymbolTol * scale) {
    throw UnboundedBelowError("inf_HI: classical symbol is not positive (min eigenvalue " +
                              std::to_string(r.symbol_min) + ")");
  }
  r.boundary = std::abs(r.symbol_min) <= 1e-8 * scale;
  const std::vector<double> ev = detail::sigma_beta_sq_eigen(gen);
  double tr_sqrt = 0.0;
  for (double x : ev) tr_sqrt += std::sqrt(std::max(0.0, x));
  // Eigenvalues come in equal pairs; √(λ_{2j−1}λ_{2j}) per pair.
  for (std::size_t k = 0; k + 1 < ev.size(); k += 2) {
    r.symplectic_eigen_products.push_back(std::sqrt(std::sqrt(std::max(0.0, ev[k] * ev[k + 1]))));
  }
  r.inf_HI = 0.5 * tr_sqrt - 0.5 * gen.h.trace().real();
  r.cII_shift = -r.inf_HI;
  return r;
}

}  // namespace bogo

#endif  // BOGO_INFIMUM_HPP
