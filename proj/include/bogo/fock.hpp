#ifndef BOGO_FOCK_HPP
#define BOGO_FOCK_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bogo/core.hpp"
#include "bogo/symplectic.hpp"

namespace bogo {

inline constexpr double kMaxBasisSize = 2e5;
// Dense operators on spaces beyond this size would not fit in memory.
inline constexpr Eigen::Index kMaxDenseDim = 10000;

/// Number of occupation tuples of `modes` modes with total ≤ cutoff, C(cutoff+modes, modes).
inline double basis_size(int modes, int cutoff) {
  double c = 1.0;
  for (int k = 1; k <= modes; ++k) c = c * (cutoff + k) / k;
  return std::round(c);
}

using Occupation = std::vector<int>;

/// Truncated bosonic Fock space over C^d: all occupations with Σnᵢ ≤ cutoff,
/// ordered by total number then lexicographically. Index 0 is the vacuum and
/// the basis of a smaller cutoff is a prefix of the basis of a larger one.
class FockSpace {
 public:
  FockSpace(int modes, int cutoff) : modes_(modes), cutoff_(cutoff) {
    if (modes <= 0) throw InputError("FockSpace: number of modes must be positive");
    if (cutoff < 0) throw InputError("FockSpace: cutoff must be nonnegative");
    const double size = basis_size(modes, cutoff);
    if (size > kMaxBasisSize) {
      throw CapacityError("FockSpace: basis size " + std::to_string(static_cast<long long>(size)) +
                          " exceeds capacity " +
                          std::to_string(static_cast<long long>(kMaxBasisSize)));
    }
    basis_.reserve(static_cast<std::size_t>(size));
    sector_end_.assign(static_cast<std::size_t>(cutoff) + 1, 0);
    Occupation occ(static_cast<std::size_t>(modes), 0);
    for (int total = 0; total <= cutoff; ++total) {
      enumerate(occ, 0, total);
      sector_end_[static_cast<std::size_t>(total)] = static_cast<Eigen::Index>(basis_.size());
    }
    index_.reserve(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], static_cast<Eigen::Index>(k));
    up_.assign(basis_.size() * static_cast<std::size_t>(modes), -1);
    down_.assign(basis_.size() * static_cast<std::size_t>(modes), -1);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      Occupation o = basis_[k];
      for (int i = 0; i < modes; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        ++o[ii];
        up_[k * ii_stride() + ii] = find(o);
        o[ii] -= 2;
        if (o[ii] >= 0) down_[k * ii_stride() + ii] = find(o);
        ++o[ii];
      }
    }
  }

  int modes() const { return modes_; }
  int cutoff() const { return cutoff_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis_.size()); }
  const std::vector<Occupation>& basis() const { return basis_; }
  const Occupation& state(Eigen::Index k) const { return basis_[static_cast<std::size_t>(k)]; }

  int total(Eigen::Index k) const {
    int s = 0;
    for (int n : state(k)) s += n;
    return s;
  }

  /// Index of an occupation tuple, or −1 when it lies outside the truncation.
  Eigen::Index find(const Occupation& occ) const {
    const auto it = index_.find(occ);
    return it == index_.end() ? -1 : it->second;
  }

  /// Index of state k with one more quantum in mode i (−1 past the cutoff).
  Eigen::Index up(Eigen::Index k, int i) const {
    return up_[static_cast<std::size_t>(k) * ii_stride() + static_cast<std::size_t>(i)];
  }
  /// Index of state k with one quantum removed from mode i (−1 if empty).
  Eigen::Index down(Eigen::Index k, int i) const {
    return down_[static_cast<std::size_t>(k) * ii_stride() + static_cast<std::size_t>(i)];
  }

  /// Number of basis states with total particle number ≤ s (clamped to the space).
  Eigen::Index sector_dim(int s) const {
    if (s < 0) return 0;
    if (s >= cutoff_) return dim();
    return sector_end_[static_cast<std::size_t>(s)];
  }

  static std::string ordering_tag() { return "total-then-lex"; }

 private:
  struct OccupationHash {
    std::size_t operator()(const Occupation& o) const noexcept {
      std::size_t h = 1469598103934665603ULL;
      for (int n : o) {
        h ^= static_cast<std::size_t>(n) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

  std::size_t ii_stride() const { return static_cast<std::size_t>(modes_); }

  // Appends all occupations of the remaining modes summing to `remaining`, in
  // ascending lexicographic order.
  void enumerate(Occupation& occ, int mode, int remaining) {
    const auto m = static_cast<std::size_t>(mode);
    if (mode == modes_ - 1) {
      occ[m] = remaining;
      basis_.push_back(occ);
      occ[m] = 0;
      return;
    }
    for (int n = 0; n <= remaining; ++n) {
      occ[m] = n;
      enumerate(occ, mode + 1, remaining - n);
    }
    occ[m] = 0;
  }

  int modes_;
  int cutoff_;
  std::vector<Occupation> basis_;
  std::vector<Eigen::Index> sector_end_;
  std::unordered_map<Occupation, Eigen::Index, OccupationHash> index_;
  std::vector<Eigen::Index> up_;
  std::vector<Eigen::Index> down_;
};

using FockSpacePtr = std::shared_ptr<const FockSpace>;

inline FockSpacePtr build_space(int modes, int cutoff) {
  return std::make_shared<const FockSpace>(modes, cutoff);
}

using Grading = std::set<int>;

inline Grading add_gradings(const Grading& a, const Grading& b) {
  Grading out;
  for (int x : a)
    for (int y : b) out.insert(x + y);
  return out;
}

/// Largest raising degree in a grading (0 when nothing raises).
inline int max_raise(const Grading& g) { return g.empty() ? 0 : std::max(0, *g.rbegin()); }

/// Dense operator on a truncated Fock space, tagged with the particle-number
/// changes it can produce.
class FockOperator {
 public:
  FockOperator(FockSpacePtr space, CMatrix matrix, Grading grading)
      : space_(std::move(space)), matrix_(std::move(matrix)), grading_(std::move(grading)) {
    if (matrix_.rows() != space_->dim() || matrix_.cols() != space_->dim()) {
      throw InputError("FockOperator: matrix does not match the space dimension");
    }
  }

  static FockOperator identity(const FockSpacePtr& space) {
    return FockOperator(space, CMatrix::Identity(space->dim(), space->dim()), Grading{0});
  }

  const FockSpacePtr& space() const { return space_; }
  const CMatrix& matrix() const { return matrix_; }
  const Grading& grading() const { return grading_; }

  /// Sector on which the matrix equals the restriction of the untruncated operator.
  int reliable_sector() const { return space_->cutoff() - max_raise(grading_); }

  FockOperator adjoint() const {
    Grading g;
    for (int x : grading_) g.insert(-x);
    return FockOperator(space_, matrix_.adjoint(), g);
  }

  FockOperator operator*(const FockOperator& o) const {
    check_same(o);
    return FockOperator(space_, matrix_ * o.matrix_, add_gradings(grading_, o.grading_));
  }
  FockOperator operator+(const FockOperator& o) const {
    check_same(o);
    Grading g = grading_;
    g.insert(o.grading_.begin(), o.grading_.end());
    return FockOperator(space_, matrix_ + o.matrix_, g);
  }
  FockOperator operator-(const FockOperator& o) const {
    check_same(o);
    Grading g = grading_;
    g.insert(o.grading_.begin(), o.grading_.end());
    return FockOperator(space_, matrix_ - o.matrix_, g);
  }
  FockOperator operator*(Complex c) const { return FockOperator(space_, c * matrix_, grading_); }
  friend FockOperator operator*(Complex c, const FockOperator& op) { return op * c; }

 private:
  void check_same(const FockOperator& o) const {
    if (space_->modes() != o.space_->modes() || space_->cutoff() != o.space_->cutoff()) {
      throw InputError("FockOperator: operands live on different Fock spaces");
    }
  }

  FockSpacePtr space_;
  CMatrix matrix_;
  Grading grading_;
};

inline FockOperator commutator(const FockOperator& a, const FockOperator& b) {
  return a * b - b * a;
}

struct FockVector {
  FockSpacePtr space;
  CVector amplitudes;

  /// Largest total particle number carrying a nonzero amplitude (−1 for the zero vector).
  int max_occupied() const {
    for (Eigen::Index k = amplitudes.size() - 1; k >= 0; --k) {
      if (amplitudes(k) != Complex{0.0, 0.0}) return space->total(k);
    }
    return -1;
  }
};

inline FockVector vacuum(const FockSpacePtr& space) {
  CVector a = CVector::Zero(space->dim());
  a(0) = 1.0;
  return FockVector{space, a};
}

/// Operator norm of m restricted to the first `cols` columns, i.e. ‖M Π‖ for the
/// projection onto a leading block of the basis.
inline double restricted_norm(const CMatrix& m, Eigen::Index cols) {
  cols = std::min(cols, m.cols());
  if (cols <= 0 || m.rows() == 0) return 0.0;
  const CMatrix block = m.leftCols(cols);
  const CMatrix gram = block.adjoint() * block;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues()(cols - 1)));
}

/// ‖M Π_{Σn ≤ sector}‖ for an operator on `space`.
inline double sector_norm(const FockSpace& space, const CMatrix& m, int sector) {
  return restricted_norm(m, space.sector_dim(sector));
}

namespace detail {

inline void require_dense(const FockSpace& s) {
  if (s.dim() > kMaxDenseDim) {
    throw CapacityError("dense operator on " + std::to_string(s.dim()) +
                        " basis states exceeds limit " + std::to_string(kMaxDenseDim));
  }
}

inline void require_modes(const FockSpace& s, Eigen::Index n, const char* what) {
  if (n != s.modes()) {
    throw InputError(std::string(what) + ": expected dimension " + std::to_string(s.modes()) +
                     ", got " + std::to_string(n));
  }
}

// out += Σ_i g_i a*_i in, where `in` is supported on the sector with `total` quanta.
inline void apply_creation(const FockSpace& s, const CVector& g, const CVector& in, int total,
                           CVector& out) {
  const Eigen::Index begin = s.sector_dim(total - 1);
  const Eigen::Index end = s.sector_dim(total);
  for (Eigen::Index m = begin; m < end; ++m) {
    const Complex c = in(m);
    if (c == Complex{0.0, 0.0}) continue;
    const Occupation& occ = s.state(m);
    for (int i = 0; i < s.modes(); ++i) {
      const Eigen::Index t = s.up(m, i);
      if (t < 0) continue;
      out(t) += g(i) * std::sqrt(static_cast<double>(occ[static_cast<std::size_t>(i)] + 1)) * c;
    }
  }
}

}  // namespace detail

struct LadderPair {
  FockOperator annihilation;  // a(f), antilinear in f
  FockOperator creation;      // a*(f)
};

/// a*(f) = Σ f_j a*_j and a(f) = a*(f)^†.
inline LadderPair ladder(const FockSpacePtr& space, const CVector& f) {
  const FockSpace& s = *space;
  detail::require_modes(s, f.size(), "ladder");
  detail::require_dense(s);
  CMatrix up = CMatrix::Zero(s.dim(), s.dim());
  for (Eigen::Index k = 0; k < s.dim(); ++k) {
    const Occupation& occ = s.state(k);
    for (int j = 0; j < s.modes(); ++j) {
      const Eigen::Index t = s.up(k, j);
      if (t < 0) continue;
      up(t, k) += f(j) * std::sqrt(static_cast<double>(occ[static_cast<std::size_t>(j)] + 1));
    }
  }
  FockOperator creation(space, up, Grading{1});
  return LadderPair{creation.adjoint(), creation};
}

/// dΓ(h) = Σ_{ij} h_ij a*_i a_j.
inline FockOperator second_quantize(const FockSpacePtr& space, const CMatrix& h) {
  const FockSpace& s = *space;
  if (!is_square(h)) throw InputError("second_quantize: matrix is not square");
  detail::require_modes(s, h.rows(), "second_quantize");
  detail::require_dense(s);
  CMatrix m = CMatrix::Zero(s.dim(), s.dim());
  for (Eigen::Index k = 0; k < s.dim(); ++k) {
    const Occupation& occ = s.state(k);
    for (int j = 0; j < s.modes(); ++j) {
      const int nj = occ[static_cast<std::size_t>(j)];
      if (nj == 0) continue;
      const Eigen::Index low = s.down(k, j);
      const double fj = std::sqrt(static_cast<double>(nj));
      const Occupation& lo = s.state(low);
      for (int i = 0; i < s.modes(); ++i) {
        const Complex hij = h(i, j);
        if (hij == Complex{0.0, 0.0}) continue;
        const Eigen::Index t = s.up(low, i);
        m(t, k) += hij * fj * std::sqrt(static_cast<double>(lo[static_cast<std::size_t>(i)] + 1));
      }
    }
  }
  return FockOperator(space, m, Grading{0});
}

inline FockOperator number_operator(const FockSpacePtr& space) {
  return second_quantize(space, CMatrix::Identity(space->modes(), space->modes()));
}

struct QuadPair {
  FockOperator annihilation;  // a(v) = a*(v)^†
  FockOperator creation;      // a*(v) = Σ v_jk a*_j a*_k
};

/// Quadratic creation/annihilation operators of a complex symmetric matrix.
inline QuadPair quad_pair(const FockSpacePtr& space, const CMatrix& v, double sym_tol = 1e-12) {
  const FockSpace& s = *space;
  if (!is_square(v)) throw InputError("quad_pair: matrix is not square");
  detail::require_modes(s, v.rows(), "quad_pair");
  const double scale = std::max(1.0, v.norm());
  if (symmetry_residual(v) > sym_tol * scale) {
    throw InputError("quad_pair: v is not complex symmetric");
  }
  detail::require_dense(s);
  CMatrix m = CMatrix::Zero(s.dim(), s.dim());
  for (Eigen::Index k = 0; k < s.dim(); ++k) {
    const Occupation& occ = s.state(k);
    for (int i = 0; i < s.modes(); ++i) {
      const Eigen::Index k1 = s.up(k, i);
      if (k1 < 0) continue;
      const double fi = std::sqrt(static_cast<double>(occ[static_cast<std::size_t>(i)] + 1));
      const Occupation& o1 = s.state(k1);
      for (int j = 0; j < s.modes(); ++j) {
        const Complex vij = v(i, j);
        if (vij == Complex{0.0, 0.0}) continue;
        const Eigen::Index k2 = s.up(k1, j);
        if (k2 < 0) continue;
        m(k2, k) += vij * fi * std::sqrt(static_cast<double>(o1[static_cast<std::size_t>(j)] + 1));
      }
    }
  }
  FockOperator creation(space, m, Grading{2});
  return QuadPair{creation.adjoint(), creation};
}

/// φ(f) = (a(f) + a*(f))/√2.
inline FockOperator field(const FockSpacePtr& space, const CVector& f) {
  const LadderPair lp = ladder(space, f);
  return (lp.annihilation + lp.creation) * Complex{1.0 / std::sqrt(2.0), 0.0};
}

/// W(f) = e^{iφ(f)} of the truncated field operator.
inline FockOperator weyl(const FockSpacePtr& space, const CVector& f) {
  const FockOperator phi = field(space, f);
  Grading g;
  for (int k = -space->cutoff(); k <= space->cutoff(); ++k) g.insert(k);
  return FockOperator(space, expm(kI * phi.matrix()), g);
}

/// Γ(q), acting as q⊗…⊗q on each particle sector. Column of |n⟩ is built from
/// the column of |n − e_j⟩ via Γ(q) a*_j = a*(q e_j) Γ(q).
inline FockOperator gamma(const FockSpacePtr& space, const CMatrix& q) {
  const FockSpace& s = *space;
  if (!is_square(q)) throw InputError("gamma: matrix is not square");
  detail::require_modes(s, q.rows(), "gamma");
  detail::require_dense(s);
  CMatrix m = CMatrix::Zero(s.dim(), s.dim());
  m(0, 0) = 1.0;
  CVector in(s.dim());
  CVector out(s.dim());
  for (Eigen::Index k = 1; k < s.dim(); ++k) {
    const Occupation& occ = s.state(k);
    int j = 0;
    while (occ[static_cast<std::size_t>(j)] == 0) ++j;
    const Eigen::Index low = s.down(k, j);
    const int total = s.total(k);
    in = m.col(low);
    out.setZero();
    detail::apply_creation(s, q.col(j), in, total - 1, out);
    m.col(k) = out / std::sqrt(static_cast<double>(occ[static_cast<std::size_t>(j)]));
  }
  return FockOperator(space, m, Grading{0});
}

/// H_I = dΓ(h) + ½(a*(v) + a(v)).
inline FockOperator hamiltonian_HI(const FockSpacePtr& space, const Generator& gen) {
  require_valid(gen);
  const QuadPair qp = quad_pair(space, gen.v, 1e-10);
  const FockOperator dg = second_quantize(space, gen.h);
  FockOperator h = dg + (qp.creation + qp.annihilation) * Complex{0.5, 0.0};
  // exact Hermitian
  CMatrix m = 0.5 * (h.matrix() + h.matrix().adjoint());
  return FockOperator(space, m, Grading{-2, 0, 2});
}

}  // namespace bogo

#endif  // BOGO_FOCK_HPP
