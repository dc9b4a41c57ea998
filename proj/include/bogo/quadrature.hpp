#ifndef BOGO_QUADRATURE_HPP
#define BOGO_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <functional>

#include "bogo/core.hpp"

namespace bogo {

struct QuadratureResult {
  Complex value;
  double error_estimate = 0.0;
  std::size_t intervals = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  std::size_t max_intervals = std::size_t{1} << 16;
};

namespace detail {

struct SimpsonPanel {
  double a, b;
  Complex fa, fm, fb;
  Complex whole;
};

template <class F>
void simpson_recurse(const F& f, const SimpsonPanel& p, double tol, int depth,
                     QuadratureResult& out, std::size_t max_intervals) {
  const double m = 0.5 * (p.a + p.b);
  const double lm = 0.5 * (p.a + m);
  const double rm = 0.5 * (m + p.b);
  const Complex flm = f(lm);
  const Complex frm = f(rm);
  const double h = p.b - p.a;
  const Complex left = (h / 12.0) * (p.fa + 4.0 * flm + p.fm);
  const Complex right = (h / 12.0) * (p.fm + 4.0 * frm + p.fb);
  const Complex delta = left + right - p.whole;
  const double err = std::abs(delta) / 15.0;
  if (err <= tol || depth <= 0 || out.intervals + 2 > max_intervals) {
    out.value += left + right + delta / 15.0;
    out.error_estimate += err;
    out.intervals += 2;
    return;
  }
  simpson_recurse(f, SimpsonPanel{p.a, m, p.fa, flm, p.fm, left}, 0.5 * tol, depth - 1, out,
                  max_intervals);
  simpson_recurse(f, SimpsonPanel{m, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth - 1, out,
                  max_intervals);
}

}  // namespace detail

/// Adaptive Simpson quadrature of a complex integrand over [a, b] (b < a allowed).
/// Throws AccuracyError when the error estimate exceeds the tolerance after
/// exhausting the interval budget.
template <class F>
QuadratureResult integrate(const F& f, double a, double b, const QuadratureOptions& opt = {}) {
  QuadratureResult out{Complex{0.0, 0.0}, 0.0, 0};
  if (a == b) return out;
  double sign = 1.0;
  if (b < a) {
    std::swap(a, b);
    sign = -1.0;
  }
  // Start from a handful of panels so oscillatory integrands are not
  // mistaken for smooth ones by the first estimate.
  constexpr int kPanels = 8;
  const double w = (b - a) / kPanels;
  const int max_depth = 48;
  for (int k = 0; k < kPanels; ++k) {
    const double pa = a + k * w;
    const double pb = (k + 1 == kPanels) ? b : pa + w;
    const Complex fa = f(pa);
    const Complex fb = f(pb);
    const Complex fm = f(0.5 * (pa + pb));
    const Complex whole = ((pb - pa) / 6.0) * (fa + 4.0 * fm + fb);
    detail::simpson_recurse(f, detail::SimpsonPanel{pa, pb, fa, fm, fb, whole},
                            opt.abs_tol / kPanels, max_depth, out, opt.max_intervals);
  }
  if (!(out.error_estimate <= opt.abs_tol) || !std::isfinite(std::abs(out.value))) {
    throw AccuracyError("adaptive quadrature did not reach tolerance " +
                        std::to_string(opt.abs_tol) + " (estimate " +
                        std::to_string(out.error_estimate) + ")");
  }
  out.value *= sign;
  return out;
}

}  // namespace bogo

#endif  // BOGO_QUADRATURE_HPP
