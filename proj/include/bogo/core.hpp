#ifndef BOGO_CORE_HPP
#define BOGO_CORE_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace bogo {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

// Error hierarchy. Every error thrown by the library derives from Error so
// front ends can map categories onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (dimension mismatch, bad JSON, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Requested Fock space or operator exceeds the dense capacity bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A mathematical domain condition is violated (e.g. ‖K‖ ≥ 1 for e^{-a*(K)/2}).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Ill-conditioned linear algebra (condition number above threshold).
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Adaptive numerics failed to reach the requested tolerance.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

/// Operation called outside its precondition (e.g. type II constant on a non type II model).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Spectrum is not bounded below (classical symbol not positive).
class UnboundedBelowError : public Error {
 public:
  using Error::Error;
};

inline double frobenius(const CMatrix& m) { return m.norm(); }

inline double operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

inline CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

inline bool is_square(const CMatrix& m) { return m.rows() == m.cols(); }

inline double hermiticity_residual(const CMatrix& m) { return operator_norm(m - m.adjoint()); }

inline double symmetry_residual(const CMatrix& m) { return operator_norm(m - m.transpose()); }

/// e^{M} for a dense matrix. Hermitian and skew-Hermitian inputs go through an
/// eigendecomposition; everything else through Padé scaling and squaring.
inline CMatrix expm(const CMatrix& m) {
  if (!is_square(m)) throw InputError("expm: matrix is not square");
  const double scale = std::max(1.0, m.norm());
  if ((m - m.adjoint()).norm() <= 1e-14 * scale) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (m + m.adjoint()));
    const RVector& w = es.eigenvalues();
    CVector e(w.size());
    for (Eigen::Index k = 0; k < w.size(); ++k) e(k) = std::exp(w(k));
    return es.eigenvectors() * e.asDiagonal() * es.eigenvectors().adjoint();
  }
  if ((m + m.adjoint()).norm() <= 1e-14 * scale) {
    // m = i H with H Hermitian.
    const CMatrix herm = -kI * m;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (herm + herm.adjoint()));
    const RVector& w = es.eigenvalues();
    CVector e(w.size());
    for (Eigen::Index k = 0; k < w.size(); ++k) e(k) = std::exp(kI * w(k));
    return es.eigenvectors() * e.asDiagonal() * es.eigenvectors().adjoint();
  }
  return m.exp();
}

/// Principal-branch z^{p}, for scalars that are known to lie away from the cut.
inline Complex principal_pow(Complex z, double p) { return std::pow(z, p); }

}  // namespace bogo

#endif  // BOGO_CORE_HPP
