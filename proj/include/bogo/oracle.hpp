#ifndef BOGO_ORACLE_HPP
#define BOGO_ORACLE_HPP

#include <cmath>
#include <vector>

#include "bogo/core.hpp"
#include "bogo/fock.hpp"
#include "bogo/implementer.hpp"
#include "bogo/symplectic.hpp"

namespace bogo {

struct ConvergenceSeries {
  std::vector<int> cutoffs;
  std::vector<double> values;
  double extrapolated = 0.0;
  bool monotone = true;
  double last_slope = 0.0;  // (x_k − x_{k−1})/(N_k − N_{k−1}) on the last pair
};

/// Aitken Δ² on the last three values; falls back to the last value when the
/// second difference vanishes to rounding.
inline double aitken_last3(const std::vector<double>& x) {
  if (x.empty()) return 0.0;
  if (x.size() < 3) return x.back();
  const double x0 = x[x.size() - 3];
  const double x1 = x[x.size() - 2];
  const double x2 = x.back();
  const double d1 = x2 - x1;
  const double denom = d1 - (x1 - x0);
  const double scale = std::max({1.0, std::abs(x0), std::abs(x1), std::abs(x2)});
  if (std::abs(denom) <= 1e-13 * scale || std::abs(d1) <= 1e-14 * scale) return x2;
  const double e = x2 - d1 * d1 / denom;
  // Not geometric (e.g. sign change of the increments): keep the last value.
  if ((x1 - x0) * d1 <= 0 || std::abs(d1) >= std::abs(x1 - x0)) return x2;
  return e;
}

inline void check_increasing(const std::vector<int>& cutoffs) {
  if (cutoffs.empty()) throw InputError("cutoffs must be nonempty");
  for (std::size_t k = 1; k < cutoffs.size(); ++k) {
    if (cutoffs[k] <= cutoffs[k - 1]) throw InputError("cutoffs must be strictly increasing");
  }
}

inline double min_eigenvalue(const CMatrix& herm) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

/// Minimum eigenvalue of the truncated H_I at each cutoff.
inline ConvergenceSeries brute_inf(const Generator& gen, const std::vector<int>& cutoffs) {
  require_valid(gen);
  if (gen.dim() > 3) throw InputError("brute_inf: at most 3 modes");
  check_increasing(cutoffs);
  ConvergenceSeries out;
  out.cutoffs = cutoffs;
  for (int c : cutoffs) {
    const FockSpacePtr s = build_space(static_cast<int>(gen.dim()), c);
    out.values.push_back(min_eigenvalue(hamiltonian_HI(s, gen).matrix()));
  }
  for (std::size_t k = 1; k < out.values.size(); ++k) {
    if (out.values[k] > out.values[k - 1] + 1e-10 * std::max(1.0, std::abs(out.values[k]))) {
      out.monotone = false;
    }
  }
  const std::size_t m = out.values.size();
  if (m >= 2) {
    out.last_slope = (out.values[m - 1] - out.values[m - 2]) / (cutoffs[m - 1] - cutoffs[m - 2]);
  }
  out.extrapolated = aitken_last3(out.values);
  return out;
}

/// e^{itH} for Hermitian H.
inline FockOperator propagator(const FockOperator& h, double t) {
  const CMatrix& m = h.matrix();
  if ((m - m.adjoint()).norm() > 1e-10 * std::max(1.0, m.norm())) {
    throw InputError("propagator: operator is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (m + m.adjoint()));
  const RVector& w = es.eigenvalues();
  CVector e(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) e(k) = std::exp(kI * t * w(k));
  Grading g;
  for (int k = -h.space()->cutoff(); k <= h.space()->cutoff(); ++k) g.insert(k);
  return FockOperator(h.space(), es.eigenvectors() * e.asDiagonal() * es.eigenvectors().adjoint(), g);
}

/// Restriction of an operator to the leading block spanned by a smaller cutoff.
inline FockOperator project(const FockOperator& op, const FockSpacePtr& target) {
  if (target->modes() != op.space()->modes() || target->cutoff() > op.space()->cutoff()) {
    throw InputError("project: target space is not a truncation of the source space");
  }
  const Eigen::Index n = target->dim();
  return FockOperator(target, op.matrix().topLeftCorner(n, n), op.grading());
}

/// e^{itH_I} computed on a larger working cutoff and projected to `space`.
inline FockOperator propagator_HI(const FockSpacePtr& space, const Generator& gen, double t,
                                  int work_cutoff) {
  if (work_cutoff < space->cutoff()) throw InputError("propagator_HI: working cutoff below target");
  const FockSpacePtr big = build_space(space->modes(), work_cutoff);
  return project(propagator(hamiltonian_HI(big, gen), t), space);
}

/// (U_I(dt) − U_I(−dt)) / (2i dt).
inline FockOperator finite_diff_generator(const FockSpacePtr& space, const Generator& gen, double dt) {
  if (!(dt >= 1e-6 && dt <= 1e-2)) throw InputError("finite_diff_generator: dt must lie in [1e-6, 1e-2]");
  const ImplementerResult plus = u_type1(space, gen, dt);
  const ImplementerResult minus = u_type1(space, gen, -dt);
  const CMatrix d = (plus.op.matrix() - minus.op.matrix()) / (2.0 * kI * dt);
  return FockOperator(space, d, Grading{-2, 0, 2});
}

/// n-step splitting (Γ(e^{iτh}) e^{iτ(a*(v)+a(v))/2})ⁿ with τ = t/n, formed on a
/// working cutoff and projected to `space`.
inline FockOperator trotter_propagator(const FockSpacePtr& space, const Generator& gen, double t,
                                       int steps, int work_cutoff) {
  require_valid(gen);
  if (steps <= 0) throw InputError("trotter_propagator: steps must be positive");
  const FockSpacePtr big = build_space(space->modes(), work_cutoff);
  const double tau = t / steps;
  const CMatrix free = gamma(big, expm(kI * tau * gen.h)).matrix();
  const QuadPair qp = quad_pair(big, gen.v, 1e-10);
  const CMatrix pair = 0.5 * (qp.creation.matrix() + qp.annihilation.matrix());
  const CMatrix kick = expm(kI * tau * pair);
  const CMatrix step = free * kick;
  CMatrix u = CMatrix::Identity(big->dim(), big->dim());
  for (int k = 0; k < steps; ++k) u = step * u;
  Grading g;
  for (int k = -work_cutoff; k <= work_cutoff; ++k) g.insert(k);
  return project(FockOperator(big, u, g), space);
}

}  // namespace bogo

#endif  // BOGO_ORACLE_HPP
