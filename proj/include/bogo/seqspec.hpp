#ifndef BOGO_SEQSPEC_HPP
#define BOGO_SEQSPEC_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "bogo/core.hpp"

namespace bogo::seq {

enum class Op { num, var, pi, add, sub, mul, div, pow, neg, sqrt, log, exp, abs };

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  Op op;
  double value = 0.0;  // for Op::num
  Expr lhs;            // unary operand or left operand
  Expr rhs;
};

inline Expr make_num(double x) { return std::make_shared<const Node>(Node{Op::num, x, nullptr, nullptr}); }
inline Expr make_var() { return std::make_shared<const Node>(Node{Op::var, 0.0, nullptr, nullptr}); }
inline Expr make_unary(Op op, Expr a) {
  return std::make_shared<const Node>(Node{op, 0.0, std::move(a), nullptr});
}
inline Expr make_binary(Op op, Expr a, Expr b) {
  return std::make_shared<const Node>(Node{op, 0.0, std::move(a), std::move(b)});
}

inline bool is_binary(Op op) {
  return op == Op::add || op == Op::sub || op == Op::mul || op == Op::div || op == Op::pow;
}
inline bool is_function(Op op) {
  return op == Op::sqrt || op == Op::log || op == Op::exp || op == Op::abs;
}

inline const char* function_name(Op op) {
  switch (op) {
    case Op::sqrt: return "sqrt";
    case Op::log: return "log";
    case Op::exp: return "exp";
    case Op::abs: return "abs";
    default: return "";
  }
}

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse() {
    Expr e = expression();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError("unexpected '" + std::string(1, src_[pos_]) + "'", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size()) throw ParseError(std::string("expected '") + c + "', got end of input", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  Expr expression() {
    Expr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make_binary(Op::add, lhs, term());
      } else if (accept('-')) {
        lhs = make_binary(Op::sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make_binary(Op::mul, lhs, unary());
      } else if (accept('/')) {
        lhs = make_binary(Op::div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return make_unary(Op::neg, unary());
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (accept('^')) return make_binary(Op::pow, base, unary());
    return base;
  }

  Expr primary() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (c == '(') {
      ++pos_;
      Expr e = expression();
      expect(')');
      return e;
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  Expr number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
        pos_ = p;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
    }
    const std::string text(src_.substr(start, pos_ - start));
    if (text == ".") throw ParseError("malformed number", start);
    char* end = nullptr;
    const double x = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || !std::isfinite(x)) throw ParseError("malformed number", start);
    return make_num(x);
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name(src_.substr(start, pos_ - start));
    if (name == "n") return make_var();
    if (name == "pi") return std::make_shared<const Node>(Node{Op::pi, 0.0, nullptr, nullptr});
    Op f;
    if (name == "sqrt") {
      f = Op::sqrt;
    } else if (name == "log") {
      f = Op::log;
    } else if (name == "exp") {
      f = Op::exp;
    } else if (name == "abs") {
      f = Op::abs;
    } else {
      throw ParseError("unknown identifier '" + name + "'", start);
    }
    expect('(');
    Expr arg = expression();
    expect(')');
    return make_unary(f, arg);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

inline int precedence(const Node& e) {
  switch (e.op) {
    case Op::add:
    case Op::sub: return 1;
    case Op::mul:
    case Op::div: return 2;
    case Op::neg: return 3;
    case Op::pow: return 4;
    default: return 5;
  }
}

inline std::string format_number(double x) {
  char buf[32];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

inline void print_to(const Node& e, std::string& out);

inline void print_child(const Node& c, int min_prec, std::string& out) {
  if (precedence(c) < min_prec) {
    out += '(';
    print_to(c, out);
    out += ')';
  } else {
    print_to(c, out);
  }
}

inline void print_to(const Node& e, std::string& out) {
  switch (e.op) {
    case Op::num:
      if (e.value < 0 || std::signbit(e.value)) {
        out += '(' + format_number(e.value) + ')';
      } else {
        out += format_number(e.value);
      }
      return;
    case Op::var: out += 'n'; return;
    case Op::pi: out += "pi"; return;
    case Op::neg:
      out += '-';
      print_child(*e.lhs, 3, out);
      return;
    case Op::add:
    case Op::sub:
      print_child(*e.lhs, 1, out);
      out += e.op == Op::add ? " + " : " - ";
      print_child(*e.rhs, 2, out);
      return;
    case Op::mul:
    case Op::div:
      print_child(*e.lhs, 2, out);
      out += e.op == Op::mul ? " * " : " / ";
      print_child(*e.rhs, 3, out);
      return;
    case Op::pow:
      print_child(*e.lhs, 5, out);
      out += '^';
      print_child(*e.rhs, 3, out);
      return;
    default:
      out += function_name(e.op);
      out += '(';
      print_to(*e.lhs, out);
      out += ')';
      return;
  }
}

}  // namespace detail

/// Parses an expression in the variable n.
inline Expr parse(std::string_view src) { return detail::Parser(src).parse(); }

/// Minimal-parenthesis rendering; parse(print(e)) reproduces e.
inline std::string print(const Expr& e) {
  std::string out;
  detail::print_to(*e, out);
  return out;
}

inline bool equal(const Expr& a, const Expr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->op != b->op) return false;
  if (a->op == Op::num) return a->value == b->value;
  return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

inline double eval(const Node& e, double n) {
  switch (e.op) {
    case Op::num: return e.value;
    case Op::var: return n;
    case Op::pi: return M_PI;
    case Op::add: return eval(*e.lhs, n) + eval(*e.rhs, n);
    case Op::sub: return eval(*e.lhs, n) - eval(*e.rhs, n);
    case Op::mul: return eval(*e.lhs, n) * eval(*e.rhs, n);
    case Op::div: return eval(*e.lhs, n) / eval(*e.rhs, n);
    case Op::pow: return std::pow(eval(*e.lhs, n), eval(*e.rhs, n));
    case Op::neg: return -eval(*e.lhs, n);
    case Op::sqrt: return std::sqrt(eval(*e.lhs, n));
    case Op::log: return std::log(eval(*e.lhs, n));
    case Op::exp: return std::exp(eval(*e.lhs, n));
    case Op::abs: return std::abs(eval(*e.lhs, n));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

inline double eval(const Expr& e, double n) { return eval(*e, n); }

inline bool depends_on_n(const Node& e) {
  if (e.op == Op::var) return true;
  if (e.lhs && depends_on_n(*e.lhs)) return true;
  return e.rhs && depends_on_n(*e.rhs);
}

/// Probe points: every n ≤ 1000, then logarithmically spaced up to 10⁶.
inline const std::vector<double>& probe_points() {
  static const std::vector<double> pts = [] {
    std::vector<double> p;
    for (int n = 0; n <= 1000; ++n) p.push_back(n);
    for (int k = 1; k <= 120; ++k) {
      const double x = std::round(std::pow(10.0, 3.0 + 3.0 * k / 120.0));
      if (x > p.back()) p.push_back(x);
    }
    return p;
  }();
  return pts;
}

/// First probe n where the expression is not finite, if any.
inline std::optional<double> first_invalid_probe(const Expr& e) {
  for (double n : probe_points()) {
    if (!std::isfinite(eval(e, n))) return n;
  }
  return std::nullopt;
}

inline void validate(const Expr& e, const std::string& label = "expression") {
  if (const auto bad = first_invalid_probe(e)) {
    throw InputError(label + " '" + print(e) + "' is not finite at n = " +
                     detail::format_number(*bad));
  }
}

enum class AsymKind { power, log_power, exponential, bounded, unknown };

inline const char* to_string(AsymKind k) {
  switch (k) {
    case AsymKind::power: return "power";
    case AsymKind::log_power: return "log-corrected-power";
    case AsymKind::exponential: return "exponential";
    case AsymKind::bounded: return "bounded";
    case AsymKind::unknown: return "unknown";
  }
  return "unknown";
}

/// f(n) ~ coefficient · e^{rate·n} · n^exponent · (log n)^log_exponent as n → ∞.
/// An infinite rate stands for faster-than-any-power growth or decay.
struct AsymptoticClass {
  AsymKind kind = AsymKind::unknown;
  double exponent = 0.0;
  double log_exponent = 0.0;
  double rate = 0.0;
  double coefficient = 0.0;
  bool zero = false;         // identically zero
  bool symbolic = true;      // false when obtained by regression
  double residual = 0.0;     // regression residual (numeric path)

  static AsymptoticClass unknown() { return AsymptoticClass{}; }
  static AsymptoticClass zero_class() {
    AsymptoticClass c;
    c.kind = AsymKind::bounded;
    c.zero = true;
    return c;
  }
  static AsymptoticClass term(double coeff, double a, double b, double r = 0.0) {
    AsymptoticClass c;
    c.coefficient = coeff;
    c.exponent = a;
    c.log_exponent = b;
    c.rate = r;
    if (r != 0.0) {
      c.kind = AsymKind::exponential;
    } else if (b != 0.0) {
      c.kind = AsymKind::log_power;
    } else {
      c.kind = AsymKind::power;
    }
    return c;
  }

  bool known() const { return kind != AsymKind::unknown; }
  bool is_term() const { return known() && !zero; }

  /// −1, 0, +1 for f → 0, bounded away from 0 and ∞, and ∞ in modulus.
  int growth() const {
    if (zero) return -1;
    if (rate != 0.0) return rate > 0 ? 1 : -1;
    if (exponent != 0.0) return exponent > 0 ? 1 : -1;
    if (log_exponent != 0.0) return log_exponent > 0 ? 1 : -1;
    return 0;
  }
};

namespace detail {

constexpr double kExpTol = 1e-12;

inline bool same_order(const AsymptoticClass& a, const AsymptoticClass& b) {
  const auto eq = [](double x, double y) {
    if (std::isinf(x) || std::isinf(y)) return x == y;
    return std::abs(x - y) <= kExpTol * std::max(1.0, std::abs(x));
  };
  if (std::isinf(a.rate) || std::isinf(b.rate)) return false;
  return eq(a.rate, b.rate) && eq(a.exponent, b.exponent) && eq(a.log_exponent, b.log_exponent);
}

// −1 if a is of strictly lower order than b, +1 if higher, 0 if same order,
// 2 when the classes cannot be ordered.
inline int compare_order(const AsymptoticClass& a, const AsymptoticClass& b) {
  if (std::isinf(a.rate) && a.rate == b.rate) return 2;
  if (same_order(a, b)) return 0;
  const auto cmp = [](double x, double y) {
    if (x == y) return 0;
    if (std::isinf(x) || std::isinf(y)) return x < y ? -1 : 1;
    if (std::abs(x - y) <= kExpTol * std::max(1.0, std::abs(x))) return 0;
    return x < y ? -1 : 1;
  };
  if (const int c = cmp(a.rate, b.rate)) return c;
  if (const int c = cmp(a.exponent, b.exponent)) return c;
  return cmp(a.log_exponent, b.log_exponent);
}

// Whether e is exactly α n + β on the probe set; returns (α, β).
inline std::optional<std::pair<double, double>> affine_in_n(const Node& e) {
  const double b = eval(e, 0.0);
  const double a = eval(e, 1.0) - b;
  if (!std::isfinite(a) || !std::isfinite(b)) return std::nullopt;
  for (double n : {2.0, 3.0, 7.0, 100.0, 12345.0}) {
    const double x = eval(e, n);
    if (std::abs(x - (a * n + b)) > 1e-9 * std::max(1.0, std::abs(x))) return std::nullopt;
  }
  return std::make_pair(a, b);
}

inline AsymptoticClass sym(const Node& e);

inline AsymptoticClass sym_pow(const AsymptoticClass& base, double p) {
  if (base.zero) return p > 0 ? AsymptoticClass::zero_class() : AsymptoticClass::unknown();
  if (!base.is_term()) return AsymptoticClass::unknown();
  if (base.coefficient < 0 && std::floor(p) != p) return AsymptoticClass::unknown();
  if (base.log_exponent != 0.0 && base.coefficient < 0) return AsymptoticClass::unknown();
  return AsymptoticClass::term(std::pow(base.coefficient, p), base.exponent * p,
                               base.log_exponent * p, base.rate * p);
}

inline AsymptoticClass sym_add(const AsymptoticClass& a, const AsymptoticClass& b, double sign) {
  if (!a.known() || !b.known()) return AsymptoticClass::unknown();
  if (a.zero && b.zero) return AsymptoticClass::zero_class();
  if (a.zero) return AsymptoticClass::term(sign * b.coefficient, b.exponent, b.log_exponent, b.rate);
  if (b.zero) return a;
  const int c = compare_order(a, b);
  if (c == 2) return AsymptoticClass::unknown();
  if (c > 0) return a;
  if (c < 0) return AsymptoticClass::term(sign * b.coefficient, b.exponent, b.log_exponent, b.rate);
  const double coeff = a.coefficient + sign * b.coefficient;
  const double scale = std::max(std::abs(a.coefficient), std::abs(b.coefficient));
  // Leading terms cancel: the class of the remainder is not tracked.
  if (std::abs(coeff) <= 1e-12 * scale) return AsymptoticClass::unknown();
  return AsymptoticClass::term(coeff, a.exponent, a.log_exponent, a.rate);
}

inline AsymptoticClass sym(const Node& e) {
  if (!depends_on_n(e)) {
    const double x = eval(e, 0.0);
    if (!std::isfinite(x)) return AsymptoticClass::unknown();
    return x == 0.0 ? AsymptoticClass::zero_class() : AsymptoticClass::term(x, 0, 0);
  }
  switch (e.op) {
    case Op::var: return AsymptoticClass::term(1.0, 1.0, 0.0);
    case Op::neg: {
      AsymptoticClass c = sym(*e.lhs);
      if (c.is_term()) c.coefficient = -c.coefficient;
      return c;
    }
    case Op::add: return sym_add(sym(*e.lhs), sym(*e.rhs), 1.0);
    case Op::sub: return sym_add(sym(*e.lhs), sym(*e.rhs), -1.0);
    case Op::mul: {
      const AsymptoticClass a = sym(*e.lhs);
      const AsymptoticClass b = sym(*e.rhs);
      if (!a.known() || !b.known()) return AsymptoticClass::unknown();
      if (a.zero || b.zero) return AsymptoticClass::zero_class();
      const double r = a.rate + b.rate;
      if (std::isnan(r)) return AsymptoticClass::unknown();
      return AsymptoticClass::term(a.coefficient * b.coefficient, a.exponent + b.exponent,
                                   a.log_exponent + b.log_exponent, r);
    }
    case Op::div: {
      const AsymptoticClass a = sym(*e.lhs);
      const AsymptoticClass b = sym(*e.rhs);
      if (!a.known() || !b.known() || b.zero) return AsymptoticClass::unknown();
      if (a.zero) return AsymptoticClass::zero_class();
      const double r = a.rate - b.rate;
      if (std::isnan(r)) return AsymptoticClass::unknown();
      return AsymptoticClass::term(a.coefficient / b.coefficient, a.exponent - b.exponent,
                                   a.log_exponent - b.log_exponent, r);
    }
    case Op::pow: {
      if (!depends_on_n(*e.rhs)) return sym_pow(sym(*e.lhs), eval(*e.rhs, 0.0));
      if (!depends_on_n(*e.lhs)) {
        const double c = eval(*e.lhs, 0.0);
        if (!(c > 0)) return AsymptoticClass::unknown();
        if (c == 1.0) return AsymptoticClass::term(1.0, 0, 0);
        if (const auto ab = affine_in_n(*e.rhs)) {
          return AsymptoticClass::term(std::pow(c, ab->second), 0, 0, ab->first * std::log(c));
        }
        const AsymptoticClass x = sym(*e.rhs);
        if (x.is_term() && x.growth() > 0) {
          const double sgn = (x.coefficient > 0) == (c > 1.0) ? 1.0 : -1.0;
          return AsymptoticClass::term(1.0, 0, 0, sgn * INFINITY);
        }
        return AsymptoticClass::unknown();
      }
      return AsymptoticClass::unknown();
    }
    case Op::sqrt: return sym_pow(sym(*e.lhs), 0.5);
    case Op::abs: {
      AsymptoticClass c = sym(*e.lhs);
      if (c.is_term()) c.coefficient = std::abs(c.coefficient);
      return c;
    }
    case Op::exp: {
      if (const auto ab = affine_in_n(*e.lhs)) {
        return AsymptoticClass::term(std::exp(ab->second), 0, 0, ab->first);
      }
      const AsymptoticClass x = sym(*e.lhs);
      if (!x.is_term()) return AsymptoticClass::unknown();
      if (x.growth() < 0) return AsymptoticClass::term(1.0, 0, 0);
      if (x.growth() > 0 && x.rate == 0.0 && x.exponent > 0) {
        return AsymptoticClass::term(1.0, 0, 0, x.coefficient > 0 ? INFINITY : -INFINITY);
      }
      return AsymptoticClass::unknown();
    }
    case Op::log: {
      const AsymptoticClass x = sym(*e.lhs);
      if (!x.is_term() || x.coefficient <= 0) return AsymptoticClass::unknown();
      if (std::isinf(x.rate)) return AsymptoticClass::unknown();
      if (x.rate != 0.0) return AsymptoticClass::term(x.rate, 1.0, 0.0);
      if (x.exponent != 0.0) return AsymptoticClass::term(x.exponent, 0.0, 1.0);
      if (x.log_exponent == 0.0 && x.coefficient != 1.0) {
        return AsymptoticClass::term(std::log(x.coefficient), 0.0, 0.0);
      }
      return AsymptoticClass::unknown();
    }
    default: return AsymptoticClass::unknown();
  }
}

}  // namespace detail

/// Symbolic asymptotic class, or unknown when the expression is outside the
/// recognized forms (cancelling leading terms, oscillation, iterated logs).
inline AsymptoticClass classify_symbolic(const Expr& e) { return detail::sym(*e); }

inline constexpr double kRegressionResidualLimit = 0.05;
inline constexpr double kPurePowerResidual = 5e-3;

/// Log-log regression of |f| on [1, log n, log log n] over n ∈ [2¹⁰, 2²⁰],
/// falling back to a fit with a linear-in-n term for exponentials.
inline AsymptoticClass classify_numeric(const Expr& e) {
  constexpr int kSamples = 41;
  std::vector<double> ns, ys;
  int sign = 0;
  bool all_zero = true;
  for (int k = 0; k < kSamples; ++k) {
    const double n = std::pow(2.0, 10.0 + 10.0 * k / (kSamples - 1));
    const double f = eval(e, n);
    if (!std::isfinite(f)) return AsymptoticClass::unknown();
    if (f == 0.0) continue;
    all_zero = false;
    const int s = f > 0 ? 1 : -1;
    if (sign != 0 && s != sign) return AsymptoticClass::unknown();
    sign = s;
    ns.push_back(n);
    ys.push_back(std::log(std::abs(f)));
  }
  if (all_zero) {
    AsymptoticClass c = AsymptoticClass::zero_class();
    c.symbolic = false;
    return c;
  }
  if (static_cast<int>(ns.size()) != kSamples) return AsymptoticClass::unknown();
  enum class Basis { power, log_power, exponential };
  const auto fit = [&](Basis basis) {
    const Eigen::Index m = static_cast<Eigen::Index>(ns.size());
    const Eigen::Index cols = basis == Basis::power ? 2 : 3;
    Eigen::MatrixXd a(m, cols);
    Eigen::VectorXd y(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const double ln = std::log(ns[static_cast<std::size_t>(i)]);
      a(i, 0) = 1.0;
      a(i, 1) = ln;
      if (basis == Basis::log_power) a(i, 2) = std::log(ln);
      if (basis == Basis::exponential) a(i, 2) = ns[static_cast<std::size_t>(i)];
      y(i) = ys[static_cast<std::size_t>(i)];
    }
    const Eigen::VectorXd sol = a.colPivHouseholderQr().solve(y);
    Eigen::Vector3d c = Eigen::Vector3d::Zero();
    c.head(cols) = sol;
    const double res = (a * sol - y).cwiseAbs().maxCoeff();
    return std::make_pair(c, res);
  };
  // A pure power is preferred when it already fits tightly; lower-order
  // corrections like 1/n otherwise leak into the log exponent.
  auto [cp, resp] = fit(Basis::power);
  if (resp <= kPurePowerResidual) {
    AsymptoticClass out = AsymptoticClass::term(sign * std::exp(cp(0)), cp(1), 0.0);
    out.symbolic = false;
    out.residual = resp;
    return out;
  }
  auto [c, res] = fit(Basis::log_power);
  if (res <= kRegressionResidualLimit) {
    AsymptoticClass out = AsymptoticClass::term(sign * std::exp(c(0)), c(1), c(2));
    if (std::abs(c(2)) < 1e-6) out = AsymptoticClass::term(sign * std::exp(c(0)), c(1), 0.0);
    out.symbolic = false;
    out.residual = res;
    return out;
  }
  auto [cl, resl] = fit(Basis::exponential);
  if (resl <= kRegressionResidualLimit && std::abs(cl(2)) * ns.back() > 1.0) {
    AsymptoticClass out = AsymptoticClass::term(sign * std::exp(cl(0)), cl(1), 0.0, cl(2));
    out.symbolic = false;
    out.residual = resl;
    return out;
  }
  AsymptoticClass out = AsymptoticClass::unknown();
  out.symbolic = false;
  out.residual = std::min(res, resl);
  return out;
}

/// Symbolic pattern matching first, regression second.
inline AsymptoticClass classify_asymptotics(const Expr& e) {
  AsymptoticClass c = classify_symbolic(e);
  if (c.known()) return c;
  return classify_numeric(e);
}

}  // namespace bogo::seq

#endif  // BOGO_SEQSPEC_HPP
