#ifndef BOGO_DIAGONAL_HPP
#define BOGO_DIAGONAL_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bogo/core.hpp"
#include "bogo/seqspec.hpp"
#include "bogo/symplectic.hpp"

namespace bogo {

/// Closed-form P(t), Q(t) of the single-mode generator (h, v), h real.
/// With Δ = h² − |v|²: P = C + i h S, Q = i v̄ S where C = cos(t√Δ),
/// S = sin(t√Δ)/√Δ (hyperbolic for Δ < 0, Taylor series near Δt² = 0).
inline std::pair<Complex, Complex> single_mode_PQ(double h, Complex v, double t) {
  const double av = std::abs(v);
  const double delta = (std::abs(h) - av) * (std::abs(h) + av);
  const double z = delta * t * t;
  double c;
  double s;
  if (std::abs(z) < 1e-8) {
    // Σ (−z)^k/(2k)! and t Σ (−z)^k/(2k+1)!
    double tc = 1.0;
    double ts = 1.0;
    c = 1.0;
    s = 1.0;
    for (int k = 1; k < 6; ++k) {
      tc *= -z / ((2.0 * k - 1) * (2.0 * k));
      ts *= -z / ((2.0 * k) * (2.0 * k + 1));
      c += tc;
      s += ts;
    }
    s *= t;
  } else if (delta > 0) {
    const double w = std::sqrt(delta);
    c = std::cos(w * t);
    s = std::sin(w * t) / w;
  } else {
    const double w = std::sqrt(-delta);
    c = std::cosh(w * t);
    s = std::sinh(w * t) / w;
  }
  return {Complex{c, h * s}, kI * std::conj(v) * s};
}

/// Continuous argument of P(t) for the single-mode generator, α(0) = 0.
inline double single_mode_arg(double h, double av, double t) {
  const double delta = (std::abs(h) - av) * (std::abs(h) + av);
  if (delta > 0) {
    const double w = std::sqrt(delta);
    const double c = std::abs(h) / w;
    const double x = w * t;
    const double sx = std::sin(x);
    const double cx = std::cos(x);
    // arg(cos x + i c sin x) = x + arg(cos²x + c sin²x + i (c−1) sin x cos x) for c > 0.
    const double a = x + std::atan2((c - 1.0) * sx * cx, cx * cx + c * sx * sx);
    return h >= 0 ? a : -a;
  }
  if (delta < 0) {
    const double w = std::sqrt(-delta);
    const double y = w * t;
    const double r = y == 0.0 ? 1.0 : std::tanh(y) / y;
    return std::atan(h * t * r);
  }
  return std::atan(h * t);
}

/// ½ Re ∫₀ᵗ Q v P̄⁻¹ ds for one mode, equal to ½(arg P(t) − h t).
inline double single_mode_phase(double h, Complex v, double t) {
  return 0.5 * (single_mode_arg(h, std::abs(v), t) - h * t);
}

/// Downward shift ½(h − √(h² − |v|²)) of one mode, for h ≥ |v|.
inline double single_mode_shift(double h, Complex v) {
  const double av2 = std::norm(v);
  if (av2 == 0.0) return 0.0;
  const double root = std::sqrt(std::max(0.0, h * h - av2));
  return 0.5 * av2 / (h + root);
}

struct ModeOverride {
  double h = 0.0;
  Complex v;
};

struct DiagonalModel {
  std::string h_src = "0";
  std::string v_re_src = "0";
  std::string v_im_src = "0";
  seq::Expr h = seq::make_num(0.0);
  seq::Expr v_re = seq::make_num(0.0);
  seq::Expr v_im = seq::make_num(0.0);
  std::map<long long, ModeOverride> overrides;

  static DiagonalModel from_strings(const std::string& h, const std::string& v_re,
                                    const std::string& v_im = "0") {
    DiagonalModel m;
    m.h_src = h;
    m.v_re_src = v_re;
    m.v_im_src = v_im;
    m.h = seq::parse(h);
    m.v_re = seq::parse(v_re);
    m.v_im = seq::parse(v_im);
    return m;
  }

  double h_at(long long n) const {
    if (auto it = overrides.find(n); it != overrides.end()) return it->second.h;
    return seq::eval(h, static_cast<double>(n));
  }
  Complex v_at(long long n) const {
    if (auto it = overrides.find(n); it != overrides.end()) return it->second.v;
    const double x = static_cast<double>(n);
    return Complex{seq::eval(v_re, x), seq::eval(v_im, x)};
  }

  void validate() const {
    seq::validate(h, "h expression");
    seq::validate(v_re, "v real-part expression");
    seq::validate(v_im, "v imaginary-part expression");
    for (const auto& [n, o] : overrides) {
      if (n < 0) throw InputError("override index must be nonnegative");
      if (!std::isfinite(o.h) || !std::isfinite(std::abs(o.v))) {
        throw InputError("override at n = " + std::to_string(n) + " is not finite");
      }
    }
  }

  /// Finite generator on the first `modes` modes.
  Generator truncate(int modes) const {
    CMatrix hm = CMatrix::Zero(modes, modes);
    CMatrix vm = CMatrix::Zero(modes, modes);
    for (int n = 0; n < modes; ++n) {
      hm(n, n) = h_at(n);
      vm(n, n) = v_at(n);
    }
    return Generator(hm, vm);
  }
};

enum class Verdict { yes, no, undecided };
enum class SeriesValue { convergent, divergent, undecided };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::undecided: return "undecided";
  }
  return "undecided";
}

inline const char* to_string(SeriesValue v) {
  switch (v) {
    case SeriesValue::convergent: return "convergent";
    case SeriesValue::divergent: return "divergent";
    case SeriesValue::undecided: return "undecided";
  }
  return "undecided";
}

struct SeriesVerdict {
  SeriesValue value = SeriesValue::undecided;
  std::vector<long long> cutoffs;
  std::vector<double> partial_sums;
  seq::AsymptoticClass summand_class;
  std::string basis;
};

struct PointwiseViolation {
  long long n = 0;
  double h = 0.0;
  double v_abs = 0.0;
};

struct CriterionResult {
  Verdict verdict = Verdict::undecided;
  std::string evidence;
  std::optional<SeriesVerdict> series;
  std::optional<PointwiseViolation> violation;
  std::optional<double> tail_ratio;
};

struct Classification {
  CriterionResult strongly_continuous;
  CriterionResult implementable;
  CriterionResult type_I;
  CriterionResult type_II;
  std::vector<std::string> notes;
};

inline const std::vector<long long>& default_cutoffs() {
  static const std::vector<long long> c{1000, 10000, 100000, 1000000};
  return c;
}

namespace detail {

inline bool is_zero_expr(const seq::Expr& e) {
  return !seq::depends_on_n(*e) && seq::eval(e, 0.0) == 0.0;
}

// |v|² as an expression.
inline seq::Expr v_abs2_expr(const DiagonalModel& m) {
  using seq::Expr;
  using seq::Op;
  using seq::make_binary;
  using seq::make_num;
  const Expr two = make_num(2.0);
  if (is_zero_expr(m.v_im)) return make_binary(Op::pow, m.v_re, two);
  if (is_zero_expr(m.v_re)) return make_binary(Op::pow, m.v_im, two);
  return make_binary(Op::add, make_binary(Op::pow, m.v_re, two), make_binary(Op::pow, m.v_im, two));
}

inline seq::Expr v_abs_expr(const DiagonalModel& m) {
  using seq::Op;
  using seq::make_unary;
  if (is_zero_expr(m.v_im)) return make_unary(Op::abs, m.v_re);
  if (is_zero_expr(m.v_re)) return make_unary(Op::abs, m.v_im);
  return make_unary(Op::sqrt, v_abs2_expr(m));
}

// Sequence evaluation with constant subexpressions hoisted.
class FastSeq {
 public:
  explicit FastSeq(const seq::Expr& e) : e_(e), constant_(!seq::depends_on_n(*e)) {
    if (constant_) value_ = seq::eval(e, 0.0);
  }
  double operator()(double n) const { return constant_ ? value_ : seq::eval(e_, n); }

 private:
  seq::Expr e_;
  bool constant_;
  double value_ = 0.0;
};

struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    // Neumaier compensated summation, deterministic in the order of terms.
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Visits every mode n < n_end in order with (n, h_n, v_n).
template <class F>
void for_each_mode(const DiagonalModel& m, long long n_end, F&& f) {
  const FastSeq h(m.h), vr(m.v_re), vi(m.v_im);
  auto it = m.overrides.begin();
  for (long long n = 0; n < n_end; ++n) {
    while (it != m.overrides.end() && it->first < n) ++it;
    if (it != m.overrides.end() && it->first == n) {
      f(n, it->second.h, it->second.v);
    } else {
      const double x = static_cast<double>(n);
      f(n, h(x), Complex{vr(x), vi(x)});
    }
  }
}

inline SeriesValue decide_by_class(const seq::AsymptoticClass& c, std::string& basis) {
  if (!c.known()) return SeriesValue::undecided;
  if (c.zero) {
    basis = "summand identically zero";
    return SeriesValue::convergent;
  }
  const bool numeric = !c.symbolic;
  const double margin = numeric ? 0.1 : 1e-12;
  basis = numeric ? "regressed summand class" : "symbolic summand class";
  if (c.rate != 0.0) return c.rate < 0 ? SeriesValue::convergent : SeriesValue::divergent;
  if (c.exponent < -1.0 - margin) return SeriesValue::convergent;
  if (c.exponent > -1.0 + margin) return SeriesValue::divergent;
  if (numeric) return SeriesValue::undecided;
  return c.log_exponent < -1.0 ? SeriesValue::convergent : SeriesValue::divergent;
}

// Decade increments of the partial sums at 10³…10⁶.
inline SeriesValue decide_by_partial_sums(const std::vector<double>& s, std::string& basis) {
  if (s.size() < 4) return SeriesValue::undecided;
  const double i0 = s[1] - s[0];
  const double i1 = s[2] - s[1];
  const double i2 = s[3] - s[2];
  basis = "partial-sum increments";
  const double scale = std::max(1.0, std::abs(s[3]));
  if (std::abs(i2) <= 1e-14 * scale && std::abs(i1) <= 1e-12 * scale) return SeriesValue::convergent;
  if (i0 == 0.0 || i1 == 0.0) return SeriesValue::undecided;
  const double r1 = i1 / i0;
  const double r2 = i2 / i1;
  if (r1 >= 0 && r2 >= 0 && r1 < 0.5 && r2 < 0.5) return SeriesValue::convergent;
  if (r1 >= 0.9 && r2 >= 0.9) return SeriesValue::divergent;
  return SeriesValue::undecided;
}

inline SeriesVerdict series_verdict(const seq::Expr& summand, std::vector<double> partial_sums) {
  SeriesVerdict out;
  out.cutoffs = default_cutoffs();
  out.partial_sums = std::move(partial_sums);
  out.summand_class = seq::classify_asymptotics(summand);
  out.value = decide_by_class(out.summand_class, out.basis);
  if (out.value == SeriesValue::undecided) out.value = decide_by_partial_sums(out.partial_sums, out.basis);
  if (out.value == SeriesValue::undecided) out.basis = "inconclusive";
  return out;
}

inline Verdict from_series(SeriesValue s) {
  switch (s) {
    case SeriesValue::convergent: return Verdict::yes;
    case SeriesValue::divergent: return Verdict::no;
    default: return Verdict::undecided;
  }
}

inline Verdict verdict_and(Verdict a, Verdict b) {
  if (a == Verdict::no || b == Verdict::no) return Verdict::no;
  if (a == Verdict::yes && b == Verdict::yes) return Verdict::yes;
  return Verdict::undecided;
}

}  // namespace detail

/// Four-way classification of a diagonal model: strongly continuous (i),
/// implementable (ii), type I (iii), type II (iv).
inline Classification classify(const DiagonalModel& model) {
  using seq::AsymptoticClass;
  using seq::Expr;
  using seq::Op;
  using seq::classify_asymptotics;
  using seq::make_binary;
  using seq::make_num;
  using seq::make_unary;
  model.validate();
  const std::vector<long long>& cuts = default_cutoffs();
  const long long n_end = cuts.back();

  std::vector<double> s2, s3, s4;
  detail::Accumulator a2, a3, a4;
  std::optional<PointwiseViolation> violation;
  double tail_ratio = 0.0;
  std::size_t next = 0;
  detail::for_each_mode(model, n_end, [&](long long n, double h, Complex v) {
    const double av2 = std::norm(v);
    const double av = std::sqrt(av2);
    const double ah = std::abs(h);
    a2.add(av2 / (1.0 + h * h));
    a3.add(av2 / (1.0 + ah));
    if (ah > 0.0 && ah <= 1.0) a4.add(av2 / ah);
    if (!violation && !(h >= av)) violation = PointwiseViolation{n, h, av};
    if (n >= n_end / 10) tail_ratio = std::max(tail_ratio, av / std::max(ah, 1e-300));
    if (n + 1 == cuts[next]) {
      s2.push_back(a2.value());
      s3.push_back(a3.value());
      s4.push_back(a4.value());
      ++next;
    }
  });

  Classification out;
  const Expr vabs2 = detail::v_abs2_expr(model);
  const Expr vabs = detail::v_abs_expr(model);
  const Expr one = make_num(1.0);
  const Expr abs_h = make_unary(Op::abs, model.h);

  // (i) |v_n| ≤ a|h_n| + b with a < 1.
  {
    CriterionResult& r = out.strongly_continuous;
    r.tail_ratio = tail_ratio;
    const AsymptoticClass vc = classify_asymptotics(vabs);
    const AsymptoticClass hc = classify_asymptotics(abs_h);
    if (vc.known() && vc.growth() <= 0) {
      r.verdict = Verdict::yes;
      r.evidence = "|v_n| bounded";
    } else if (vc.known() && hc.known()) {
      if (hc.zero || hc.growth() <= 0) {
        r.verdict = Verdict::no;
        r.evidence = "|v_n| unbounded while |h_n| bounded";
      } else {
        const int c = seq::detail::compare_order(vc, hc);
        if (c < 0) {
          r.verdict = Verdict::yes;
          r.evidence = "|v_n| of lower order than |h_n|";
        } else if (c == 1) {
          r.verdict = Verdict::no;
          r.evidence = "|v_n| of higher order than |h_n|";
        } else if (c == 0) {
          const double ratio = std::abs(vc.coefficient) / std::abs(hc.coefficient);
          r.verdict = ratio < 1.0 - 1e-12 ? Verdict::yes : Verdict::no;
          r.evidence = "lim |v_n|/|h_n| = " + std::to_string(ratio);
        }
      }
    }
    if (r.verdict == Verdict::undecided) {
      if (tail_ratio <= 0.9) {
        r.verdict = Verdict::yes;
        r.evidence = "tail sup |v_n|/|h_n| = " + std::to_string(tail_ratio);
      } else {
        r.evidence = "asymptotic comparison inconclusive, tail sup |v_n|/|h_n| = " +
                     std::to_string(tail_ratio);
      }
    }
  }

  // (ii) Σ |v_n|²/(1 + h_n²) < ∞.
  {
    CriterionResult& r = out.implementable;
    const Expr summand = make_binary(Op::div, vabs2, make_binary(Op::add, one, make_binary(Op::pow, model.h, make_num(2.0))));
    r.series = detail::series_verdict(summand, s2);
    r.verdict = detail::from_series(r.series->value);
    r.evidence = std::string("sum |v|^2/(1+h^2) ") + to_string(r.series->value) + " (" + r.series->basis + ")";
  }

  // (iii) Σ |v_n|²/(1 + |h_n|) < ∞.
  {
    CriterionResult& r = out.type_I;
    const Expr summand = make_binary(Op::div, vabs2, make_binary(Op::add, one, abs_h));
    r.series = detail::series_verdict(summand, s3);
    r.verdict = detail::from_series(r.series->value);
    r.evidence = std::string("sum |v|^2/(1+|h|) ") + to_string(r.series->value) + " (" + r.series->basis + ")";
  }

  // (iv) h_n ≥ |v_n| for all n and Σ_{0<|h_n|≤1} |v_n|²/|h_n| < ∞.
  {
    CriterionResult& r = out.type_II;
    Verdict pointwise;
    std::string pw_evidence;
    if (violation) {
      r.violation = violation;
      pointwise = Verdict::no;
      pw_evidence = "h_n >= |v_n| fails at n = " + std::to_string(violation->n);
    } else {
      const AsymptoticClass dc = classify_asymptotics(make_binary(Op::sub, model.h, vabs));
      if (dc.zero || (dc.is_term() && dc.coefficient > 0)) {
        pointwise = Verdict::yes;
        pw_evidence = "h_n >= |v_n| on probes and asymptotically";
      } else if (dc.is_term() && dc.coefficient < 0) {
        pointwise = Verdict::no;
        pw_evidence = "h_n - |v_n| eventually negative";
      } else {
        pointwise = Verdict::undecided;
        pw_evidence = "h_n >= |v_n| on probes, asymptotic sign unknown";
      }
    }

    SeriesVerdict sv;
    sv.cutoffs = cuts;
    sv.partial_sums = s4;
    const AsymptoticClass hc = classify_asymptotics(abs_h);
    const Expr summand = make_binary(Op::div, vabs2, abs_h);
    const auto finite = [&](const char* why) {
      sv.value = SeriesValue::convergent;
      sv.basis = why;
      sv.summand_class = AsymptoticClass::zero_class();
    };
    if (hc.zero) {
      finite("no modes with 0 < |h_n| <= 1");
    } else if (hc.is_term() && hc.growth() > 0) {
      finite("finitely many modes with |h_n| <= 1");
    } else if (hc.is_term() && hc.growth() == 0 && std::abs(hc.coefficient) > 1.0 + 1e-12) {
      finite("finitely many modes with |h_n| <= 1");
    } else if (hc.is_term() &&
               (hc.growth() < 0 || std::abs(hc.coefficient) < 1.0 - 1e-12)) {
      sv = detail::series_verdict(summand, s4);
    } else {
      sv.summand_class = AsymptoticClass::unknown();
      sv.value = detail::decide_by_partial_sums(s4, sv.basis);
      if (sv.value == SeriesValue::undecided) sv.basis = "inconclusive";
    }
    r.series = sv;
    r.verdict = detail::verdict_and(pointwise, detail::from_series(sv.value));
    r.evidence = pw_evidence + "; sum_{0<|h|<=1} |v|^2/|h| " + to_string(sv.value) + " (" + sv.basis + ")";
  }

  // Enforce type I/II ⇒ implementable ⇒ strongly continuous.
  auto& sc = out.strongly_continuous.verdict;
  auto& im = out.implementable.verdict;
  auto& t1 = out.type_I.verdict;
  auto& t2 = out.type_II.verdict;
  const auto lift = [&](Verdict& lower, Verdict& upper, const char* what) {
    if (lower == Verdict::yes && upper == Verdict::no) {
      out.notes.push_back(std::string("inconsistent verdicts: ") + what + "; both set undecided");
      lower = Verdict::undecided;
      upper = Verdict::undecided;
    } else if (lower == Verdict::yes) {
      upper = Verdict::yes;
    } else if (upper == Verdict::no) {
      lower = Verdict::no;
    }
  };
  lift(t1, im, "type I without implementability");
  lift(t2, im, "type II without implementability");
  lift(im, sc, "implementable without strong continuity");
  lift(t1, im, "type I without implementability");
  lift(t2, im, "type II without implementability");
  return out;
}

struct PhaseSums {
  std::vector<long long> cutoffs;
  std::vector<double> lambda_ren;  // Σ_{|h_n|>1, n<N} |v_n|²/(4h_n)
  std::vector<double> combined;    // Σ_{n<N} per-mode renormalized phase at time t
  double t = 0.0;
  SeriesVerdict lambda_verdict;
};

namespace detail {

inline void check_cutoffs(const std::vector<long long>& cutoffs) {
  if (cutoffs.empty()) throw InputError("cutoffs must be nonempty");
  for (std::size_t k = 0; k < cutoffs.size(); ++k) {
    if (cutoffs[k] <= 0) throw InputError("cutoffs must be positive");
    if (k > 0 && cutoffs[k] <= cutoffs[k - 1]) throw InputError("cutoffs must be strictly increasing");
  }
}

}  // namespace detail

/// Per-mode renormalized phase ½Re∫₀ᵗ Q v P̄⁻¹ ds + t|v|²/(4h) (last term only for |h| > 1).
inline double renorm_mode_phase(double h, Complex v, double t) {
  double p = single_mode_phase(h, v, t);
  if (std::abs(h) > 1.0) p += t * std::norm(v) / (4.0 * h);
  return p;
}

/// Partial sums of Tr Λ_ren and of the combined renormalized phase at time t.
inline PhaseSums renorm_phase_rate(const DiagonalModel& model, const std::vector<long long>& cutoffs,
                                   double t = 1.0) {
  using seq::AsymptoticClass;
  using seq::Expr;
  using seq::Op;
  using seq::classify_asymptotics;
  using seq::make_binary;
  using seq::make_num;
  using seq::make_unary;
  model.validate();
  detail::check_cutoffs(cutoffs);
  PhaseSums out;
  out.cutoffs = cutoffs;
  out.t = t;
  detail::Accumulator lam, comb;
  std::size_t next = 0;
  detail::for_each_mode(model, cutoffs.back(), [&](long long n, double h, Complex v) {
    if (std::abs(h) > 1.0) lam.add(std::norm(v) / (4.0 * h));
    comb.add(renorm_mode_phase(h, v, t));
    if (n + 1 == cutoffs[next]) {
      out.lambda_ren.push_back(lam.value());
      out.combined.push_back(comb.value());
      ++next;
    }
  });

  // Convergence evidence on the standard decades.
  std::vector<double> dec;
  detail::Accumulator a;
  std::size_t k = 0;
  detail::for_each_mode(model, default_cutoffs().back(), [&](long long n, double h, Complex v) {
    if (std::abs(h) > 1.0) a.add(std::norm(v) / (4.0 * std::abs(h)));
    if (n + 1 == default_cutoffs()[k]) {
      dec.push_back(a.value());
      ++k;
    }
  });
  const AsymptoticClass hc = classify_asymptotics(make_unary(Op::abs, model.h));
  if (hc.is_term() && (hc.growth() < 0 || (hc.growth() == 0 && std::abs(hc.coefficient) < 1.0 - 1e-12))) {
    out.lambda_verdict.cutoffs = default_cutoffs();
    out.lambda_verdict.partial_sums = dec;
    out.lambda_verdict.value = SeriesValue::convergent;
    out.lambda_verdict.basis = "finitely many modes with |h_n| > 1";
    out.lambda_verdict.summand_class = AsymptoticClass::zero_class();
  } else {
    const Expr summand = make_binary(Op::div, detail::v_abs2_expr(model),
                                     make_binary(Op::mul, make_num(4.0), make_unary(Op::abs, model.h)));
    out.lambda_verdict = detail::series_verdict(summand, dec);
  }
  return out;
}

/// Partial sums of Σ_n ½(h_n − √(h_n² − |v_n|²)), the total downward shift of H_I.
inline std::vector<double> type2_constant(const DiagonalModel& model, const std::vector<long long>& cutoffs) {
  const Classification c = classify(model);
  if (c.type_II.verdict != Verdict::yes) {
    throw PreconditionError(std::string("type2_constant: model is not of type II (verdict ") +
                            to_string(c.type_II.verdict) + ")");
  }
  detail::check_cutoffs(cutoffs);
  std::vector<double> out;
  detail::Accumulator acc;
  std::size_t next = 0;
  detail::for_each_mode(model, cutoffs.back(), [&](long long n, double h, Complex v) {
    if (h < std::abs(v)) {
      throw PreconditionError("type2_constant: h_n < |v_n| at n = " + std::to_string(n));
    }
    acc.add(single_mode_shift(h, v));
    if (n + 1 == cutoffs[next]) {
      out.push_back(acc.value());
      ++next;
    }
  });
  return out;
}

}  // namespace bogo

#endif  // BOGO_DIAGONAL_HPP
