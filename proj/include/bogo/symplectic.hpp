#ifndef BOGO_SYMPLECTIC_HPP
#define BOGO_SYMPLECTIC_HPP

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bogo/core.hpp"
#include "bogo/quadrature.hpp"

namespace bogo {

/// Quadratic-Hamiltonian generator data (h, v) with h Hermitian and v complex
/// symmetric. Defines A = i [[h, -v], [conj(v), -conj(h)]].
struct Generator {
  CMatrix h;
  CMatrix v;

  Generator() = default;
  Generator(CMatrix h_, CMatrix v_) : h(std::move(h_)), v(std::move(v_)) {}

  Eigen::Index dim() const { return h.rows(); }

  /// The 2d×2d generator A of the symplectic group.
  CMatrix generator_matrix() const {
    const Eigen::Index d = dim();
    CMatrix a(2 * d, 2 * d);
    a.topLeftCorner(d, d) = kI * h;
    a.topRightCorner(d, d) = -kI * v;
    a.bottomLeftCorner(d, d) = kI * v.conjugate();
    a.bottomRightCorner(d, d) = -kI * h.conjugate();
    return a;
  }
};

/// R = [[P, conj(Q)], [Q, conj(P)]] at group parameter `time`.
struct SymplecticMap {
  CMatrix P;
  CMatrix Q;
  double time = 0.0;

  Eigen::Index dim() const { return P.rows(); }

  static SymplecticMap identity(Eigen::Index d) {
    return SymplecticMap{CMatrix::Identity(d, d), CMatrix::Zero(d, d), 0.0};
  }

  CMatrix full() const {
    const Eigen::Index d = dim();
    CMatrix r(2 * d, 2 * d);
    r.topLeftCorner(d, d) = P;
    r.topRightCorner(d, d) = Q.conjugate();
    r.bottomLeftCorner(d, d) = Q;
    r.bottomRightCorner(d, d) = P.conjugate();
    return r;
  }

  static SymplecticMap from_full(const CMatrix& r, double t) {
    const Eigen::Index d = r.rows() / 2;
    return SymplecticMap{r.topLeftCorner(d, d), r.bottomLeftCorner(d, d), t};
  }

  /// First component of R(f, conj f), i.e. P f + conj(Q) conj(f).
  CVector act(const CVector& f) const { return P * f + Q.conjugate() * f.conjugate(); }
};

struct ValidationReport {
  bool ok = true;
  std::map<std::string, double> residuals;
  std::vector<std::string> messages;
};

/// Hermiticity of h and symmetry of v. Residuals are relative to the Frobenius
/// norm of the respective matrix (absolute when the matrix vanishes).
inline ValidationReport validate_generator(const CMatrix& h, const CMatrix& v, double tol = 1e-12) {
  if (!is_square(h) || !is_square(v) || h.rows() != v.rows()) {
    throw InputError("validate_generator: h and v must be square of equal dimension (got " +
                     std::to_string(h.rows()) + "x" + std::to_string(h.cols()) + " and " +
                     std::to_string(v.rows()) + "x" + std::to_string(v.cols()) + ")");
  }
  if (h.rows() == 0) throw InputError("validate_generator: dimension must be positive");
  ValidationReport report;
  const double herm = hermiticity_residual(h);
  const double sym = symmetry_residual(v);
  const double herm_rel = h.norm() > 0 ? herm / h.norm() : herm;
  const double sym_rel = v.norm() > 0 ? sym / v.norm() : sym;
  report.residuals["h_hermiticity"] = herm_rel;
  report.residuals["v_symmetry"] = sym_rel;
  if (herm_rel > tol) {
    report.ok = false;
    report.messages.push_back("h is not Hermitian");
  }
  if (sym_rel > tol) {
    report.ok = false;
    report.messages.push_back("v is not complex symmetric");
  }
  return report;
}

inline void require_valid(const Generator& gen, double tol = 1e-12) {
  const ValidationReport r = validate_generator(gen.h, gen.v, tol);
  if (!r.ok) {
    std::string msg = "invalid generator:";
    for (const auto& m : r.messages) msg += " " + m + ";";
    throw InputError(msg);
  }
}

/// R(t) = exp(tA).
inline SymplecticMap evolve(const Generator& gen, double t) {
  require_valid(gen);
  const CMatrix r = expm(t * gen.generator_matrix());
  return SymplecticMap::from_full(r, t);
}

/// max(‖RJR* − J‖, ‖R*JR − J‖) in operator norm, J = diag(i, −i).
inline double check_symplectic(const SymplecticMap& s) {
  const Eigen::Index d = s.dim();
  CMatrix j = CMatrix::Zero(2 * d, 2 * d);
  j.topLeftCorner(d, d) = kI * CMatrix::Identity(d, d);
  j.bottomRightCorner(d, d) = -kI * CMatrix::Identity(d, d);
  const CMatrix r = s.full();
  const double a = operator_norm(r * j * r.adjoint() - j);
  const double b = operator_norm(r.adjoint() * j * r - j);
  return std::max(a, b);
}

struct KLOperators {
  CMatrix K;
  CMatrix L;
  double p_condition = 1.0;
};

inline constexpr double kConditionLimit = 1e12;

/// K = conj(Q P⁻¹), L = −P⁻¹ conj(Q).
inline KLOperators kl_operators(const SymplecticMap& s) {
  Eigen::JacobiSVD<CMatrix> svd(s.P);
  const RVector& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  const double cond = smin > 0 ? sv(0) / smin : INFINITY;
  if (!(cond <= kConditionLimit)) {
    throw DegeneracyError("kl_operators: P is ill-conditioned (condition number " +
                          std::to_string(cond) + ")");
  }
  Eigen::FullPivLU<CMatrix> lu(s.P);
  const CMatrix p_inv = lu.inverse();
  KLOperators out;
  out.K = (s.Q * p_inv).conjugate();
  out.L = -p_inv * s.Q.conjugate();
  out.p_condition = cond;
  return out;
}

/// (e^{iθ} − 1)/(iθ), with the removable singularity at θ = 0 expanded.
inline Complex expm1_ratio(double theta) {
  if (std::abs(theta) < 1e-4) {
    // 1 + iθ/2 − θ²/6 − iθ³/24 + θ⁴/120
    const Complex it = kI * theta;
    Complex term = 1.0;
    Complex sum = 1.0;
    for (int k = 1; k <= 5; ++k) {
      term *= it / static_cast<double>(k + 1);
      sum += term;
    }
    return sum;
  }
  return (std::exp(kI * theta) - 1.0) / (kI * theta);
}

struct TimeAveragedV {
  CMatrix value;
  double hs_norm = 0.0;
};

/// v(t) = ∫₀ᵗ e^{iτh} v e^{iτ conj(h)} dτ, evaluated in the eigenbasis of h.
inline TimeAveragedV time_averaged_v(const Generator& gen, double t) {
  require_valid(gen);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (gen.h + gen.h.adjoint()));
  const CMatrix& u = es.eigenvectors();
  const RVector& lam = es.eigenvalues();
  // e^{iτh} = U e^{iτΛ} U*, e^{iτ conj h} = conj(U) e^{iτΛ} Uᵀ.
  const CMatrix vt = u.adjoint() * gen.v * u.conjugate();
  CMatrix w(vt.rows(), vt.cols());
  for (Eigen::Index j = 0; j < vt.rows(); ++j) {
    for (Eigen::Index k = 0; k < vt.cols(); ++k) {
      w(j, k) = vt(j, k) * t * expm1_ratio(t * (lam(j) + lam(k)));
    }
  }
  TimeAveragedV out;
  out.value = u * w * u.transpose();
  out.hs_norm = out.value.norm();
  return out;
}

/// Minimum eigenvalue of M_sym = [[h, v], [conj v, conj h]]; the classical
/// symbol is positive iff this is nonnegative.
inline double classical_symbol_min(const Generator& gen) {
  require_valid(gen);
  const Eigen::Index d = gen.dim();
  CMatrix m(2 * d, 2 * d);
  m.topLeftCorner(d, d) = gen.h;
  m.topRightCorner(d, d) = gen.v;
  m.bottomLeftCorner(d, d) = gen.v.conjugate();
  m.bottomRightCorner(d, d) = gen.h.conjugate();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace bogo

#endif  // BOGO_SYMPLECTIC_HPP
