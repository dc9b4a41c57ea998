#ifndef BOGO_IMPLEMENTER_HPP
#define BOGO_IMPLEMENTER_HPP

#include <cmath>
#include <utility>

#include <Eigen/Sparse>

#include "bogo/core.hpp"
#include "bogo/fock.hpp"
#include "bogo/quadrature.hpp"
#include "bogo/symplectic.hpp"

namespace bogo {

enum class QuadKind { raise, lower };

struct ImplementerResult {
  FockOperator op;
  Complex vacuum_overlap;
  Complex phase{1.0, 0.0};
  int reliable_sector = 0;
};

namespace detail {

using SparseC = Eigen::SparseMatrix<Complex>;

inline SparseC quad_creation_sparse(const FockSpacePtr& space, const CMatrix& m) {
  return quad_pair(space, m, 1e-10).creation.matrix().sparseView();
}

// Σ_k (−X/2)^k / k! applied to `block`; X raises the particle number by two,
// so the series terminates on the truncated space.
inline CMatrix exp_half_neg_apply(const SparseC& x, const CMatrix& block, int cutoff) {
  CMatrix out = block;
  CMatrix term = block;
  for (int k = 1; k <= cutoff / 2; ++k) {
    term = (x * term) * Complex{-0.5 / k, 0.0};
    if (term.norm() == 0.0) break;
    out += term;
  }
  return out;
}

inline void require_norm_below_one(const CMatrix& m, const char* what) {
  const double n = operator_norm(m);
  if (!(n < 1.0)) {
    throw DomainError(std::string(what) + ": operator norm " + std::to_string(n) +
                      " is not below 1");
  }
}

}  // namespace detail

/// e^{−a*(m)/2} (raise) or e^{−a(m)/2} (lower) by the terminating power series.
inline FockOperator exp_quad(const FockSpacePtr& space, const CMatrix& m, QuadKind kind) {
  if (kind == QuadKind::raise) detail::require_norm_below_one(m, "exp_quad");
  const detail::SparseC x = detail::quad_creation_sparse(space, m);
  const Eigen::Index n = space->dim();
  const CMatrix e = detail::exp_half_neg_apply(x, CMatrix::Identity(n, n), space->cutoff());
  Grading g;
  for (int k = 0; k <= space->cutoff(); k += 2) g.insert(kind == QuadKind::raise ? k : -k);
  if (kind == QuadKind::raise) return FockOperator(space, e, g);
  return FockOperator(space, e.adjoint(), g);
}

/// e^{−a*(m)/2}Ω.
inline FockVector exp_quad_vacuum(const FockSpacePtr& space, const CMatrix& m) {
  detail::require_norm_below_one(m, "exp_quad_vacuum");
  const detail::SparseC x = detail::quad_creation_sparse(space, m);
  CMatrix v = CMatrix::Zero(space->dim(), 1);
  v(0, 0) = 1.0;
  return FockVector{space, detail::exp_half_neg_apply(x, v, space->cutoff()).col(0)};
}

namespace detail {

// a*(K)-exp · Γ((P⁻¹)*) · a(L)-exp, each factor exact entrywise on the truncation.
inline CMatrix implementer_core(const FockSpacePtr& space, const SymplecticMap& s,
                                const KLOperators& kl) {
  require_norm_below_one(kl.K, "implementer");
  Eigen::FullPivLU<CMatrix> lu(s.P);
  const CMatrix p_inv = lu.inverse();
  const SparseC xk = quad_creation_sparse(space, kl.K);
  const SparseC xl = quad_creation_sparse(space, kl.L);
  const Eigen::Index n = space->dim();
  const int c = space->cutoff();
  const CMatrix lower = exp_half_neg_apply(xl, CMatrix::Identity(n, n), c).adjoint();
  const CMatrix g = gamma(space, p_inv.adjoint()).matrix();
  return exp_half_neg_apply(xk, g * lower, c);
}

inline Grading full_grading(int cutoff) {
  Grading g;
  for (int k = -cutoff; k <= cutoff; ++k) g.insert(k);
  return g;
}

}  // namespace detail

/// det(1 − K*K)^{1/4}.
inline double det_quarter(const CMatrix& k) {
  const CMatrix m = identity(k.rows()) - k.adjoint() * k;
  return std::pow(std::abs(m.determinant()), 0.25);
}

/// U_nat = det(1−K*K)^{1/4} e^{−a*(K)/2} Γ((P⁻¹)*) e^{−a(L)/2}.
inline ImplementerResult u_nat(const FockSpacePtr& space, const SymplecticMap& s) {
  if (s.dim() != space->modes()) throw InputError("u_nat: dimension mismatch");
  const KLOperators kl = kl_operators(s);
  const double c = det_quarter(kl.K);
  const CMatrix core = detail::implementer_core(space, s, kl);
  FockOperator op(space, c * core, detail::full_grading(space->cutoff()));
  const Complex overlap = op.matrix()(0, 0);
  return ImplementerResult{op, overlap, Complex{1.0, 0.0}, space->cutoff() / 2};
}

/// Tr(Q(s) v conj(P(s))⁻¹).
inline Complex type1_integrand(const Generator& gen, double s) {
  const SymplecticMap r = evolve(gen, s);
  Eigen::FullPivLU<CMatrix> lu(r.P.conjugate());
  return (r.Q * gen.v * lu.inverse()).trace();
}

/// ∫₀ᵗ Tr(Q(s) v conj(P(s))⁻¹) ds by adaptive quadrature.
inline Complex type1_trace_integral(const Generator& gen, double t, double quad_tol = 1e-10) {
  require_valid(gen);
  if (gen.v.norm() == 0.0) return Complex{0.0, 0.0};
  QuadratureOptions opt;
  opt.abs_tol = quad_tol;
  return integrate([&](double s) { return type1_integrand(gen, s); }, 0.0, t, opt).value;
}

/// exp((i/2) ∫₀ᵗ Tr(Q v P̄⁻¹) ds), the continuous branch of det(P̄(t)e^{ith̄})^{−1/2}.
/// Its modulus is det(1 − K*K)^{1/4}.
inline Complex type1_phase(const Generator& gen, double t, double quad_tol = 1e-10) {
  return std::exp(0.5 * kI * type1_trace_integral(gen, t, quad_tol));
}

/// det(P̄(t) e^{it h̄}) evaluated directly.
inline Complex type1_det(const Generator& gen, double t) {
  const SymplecticMap r = evolve(gen, t);
  return (r.P.conjugate() * expm(kI * t * gen.h.conjugate())).determinant();
}

/// U_I(t) = det(P̄e^{ith̄})^{−1/2} e^{−a*(K)/2} Γ((P⁻¹)*) e^{−a(L)/2}. The phase
/// field holds the cocycle c_I(t) relating U_I(t) to U_nat(t).
inline ImplementerResult u_type1(const FockSpacePtr& space, const Generator& gen, double t,
                                 double quad_tol = 1e-10) {
  require_valid(gen);
  if (gen.dim() != space->modes()) throw InputError("u_type1: dimension mismatch");
  const SymplecticMap s = evolve(gen, t);
  const KLOperators kl = kl_operators(s);
  const Complex pref = type1_phase(gen, t, quad_tol);
  const CMatrix core = detail::implementer_core(space, s, kl);
  FockOperator op(space, pref * core, detail::full_grading(space->cutoff()));
  const Complex cocycle = pref / det_quarter(kl.K);
  return ImplementerResult{op, pref, cocycle, space->cutoff() / 2};
}

/// c_I(t) = exp(−(i/2) Re ∫₀ᵗ Tr(v L̄(s)) ds), the cocycle from the L-trace route.
inline Complex cocycle_from_L(const Generator& gen, double t, double quad_tol = 1e-10) {
  require_valid(gen);
  if (gen.v.norm() == 0.0) return Complex{1.0, 0.0};
  QuadratureOptions opt;
  opt.abs_tol = quad_tol;
  const auto f = [&](double s) {
    const KLOperators kl = kl_operators(evolve(gen, s));
    return Complex{(gen.v * kl.L.conjugate()).trace().real(), 0.0};
  };
  const double re = integrate(f, 0.0, t, opt).value.real();
  return std::exp(-0.5 * kI * re);
}

/// ‖(U W(f) U* − W(Pf + Q̄f̄)) Π_sector‖.
inline double intertwine_residual(const FockSpacePtr& space, const FockOperator& u,
                                  const SymplecticMap& s, const CVector& f, int sector) {
  const CMatrix& um = u.matrix();
  const CMatrix lhs = um * weyl(space, f).matrix() * um.adjoint();
  const CMatrix rhs = weyl(space, s.act(f)).matrix();
  return sector_norm(*space, lhs - rhs, sector);
}

struct OverlapPair {
  Complex lhs;
  Complex rhs;
  double residual() const { return std::abs(lhs - rhs); }
};

/// ⟨e^{−a*(L)/2}Ω | e^{−a*(K)/2}Ω⟩ against det(1 − L*K)^{−1/2}.
inline OverlapPair exp_det_overlap(const FockSpacePtr& space, const CMatrix& k, const CMatrix& l) {
  const FockVector a = exp_quad_vacuum(space, l);
  const FockVector b = exp_quad_vacuum(space, k);
  const Complex lhs = a.amplitudes.dot(b.amplitudes);
  const Complex det = (identity(k.rows()) - l.adjoint() * k).determinant();
  return OverlapPair{lhs, principal_pow(det, -0.5)};
}

}  // namespace bogo

#endif  // BOGO_IMPLEMENTER_HPP
