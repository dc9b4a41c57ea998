#ifndef BOGO_IO_HPP
#define BOGO_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bogo/core.hpp"
#include "bogo/diagonal.hpp"
#include "bogo/fock.hpp"
#include "bogo/infimum.hpp"
#include "bogo/symplectic.hpp"

namespace bogo::io {

using nlohmann::json;

inline json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j, const std::string& where) {
  if (j.is_number()) return Complex{j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError(where + ": expected a number or [re, im] pair");
  }
  return Complex{j[0].get<double>(), j[1].get<double>()};
}

inline json to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

inline json to_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

inline CMatrix matrix_from_json(const json& j, Eigen::Index dim, const std::string& where) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim) {
    throw InputError(where + ": expected " + std::to_string(dim) + " rows");
  }
  CMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw InputError(where + ": row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
    }
    for (Eigen::Index k = 0; k < dim; ++k) {
      m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)],
                                  where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
  }
  return m;
}

inline CVector vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i], where + "[" + std::to_string(i) + "]");
  }
  return v;
}

inline const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

inline json to_json(const Generator& g) {
  return json{{"dim", g.dim()}, {"h", to_json(g.h)}, {"v", to_json(g.v)}};
}

inline Generator generator_from_json(const json& j) {
  const json& dj = require(j, "dim");
  if (!dj.is_number_integer() || dj.get<long long>() <= 0) throw InputError("'dim' must be a positive integer");
  const auto d = static_cast<Eigen::Index>(dj.get<long long>());
  return Generator(matrix_from_json(require(j, "h"), d, "h"), matrix_from_json(require(j, "v"), d, "v"));
}

inline json to_json(const SymplecticMap& s) {
  return json{{"dim", s.dim()}, {"P", to_json(s.P)}, {"Q", to_json(s.Q)}, {"t", s.time}};
}

inline SymplecticMap symplectic_from_json(const json& j) {
  const auto d = static_cast<Eigen::Index>(require(j, "dim").get<long long>());
  SymplecticMap s;
  s.P = matrix_from_json(require(j, "P"), d, "P");
  s.Q = matrix_from_json(require(j, "Q"), d, "Q");
  s.time = j.value("t", 0.0);
  return s;
}

inline json space_json(const FockSpace& s) {
  return json{{"d", s.modes()}, {"Nmax", s.cutoff()}, {"ordering", FockSpace::ordering_tag()}, {"size", s.dim()}};
}

inline json to_json(const FockOperator& op) {
  json g = json::array();
  for (int x : op.grading()) g.push_back(x);
  return json{{"basis", space_json(*op.space())}, {"grading", g}, {"matrix", to_json(op.matrix())}};
}

inline json to_json(const FockVector& v) {
  return json{{"basis", space_json(*v.space)},
              {"max_occupied", v.max_occupied()},
              {"amplitudes", to_json(v.amplitudes)}};
}

inline DiagonalModel diagonal_from_json(const json& j) {
  if (!j.is_object()) throw InputError("diagonal model must be a JSON object");
  const std::string h = require(j, "h_expr").get<std::string>();
  const std::string vr = j.value("v_re_expr", std::string("0"));
  const std::string vi = j.value("v_im_expr", std::string("0"));
  DiagonalModel m = DiagonalModel::from_strings(h, vr, vi);
  if (j.contains("overrides")) {
    const json& ov = j.at("overrides");
    if (!ov.is_array()) throw InputError("'overrides' must be an array");
    for (const json& o : ov) {
      const long long n = require(o, "n").get<long long>();
      ModeOverride mo;
      mo.h = require(o, "h").get<double>();
      mo.v = o.contains("v") ? complex_from_json(o.at("v"), "override v") : Complex{0.0, 0.0};
      if (!m.overrides.emplace(n, mo).second) {
        throw InputError("duplicate override for n = " + std::to_string(n));
      }
    }
  }
  return m;
}

inline json to_json(const DiagonalModel& m) {
  json ov = json::array();
  for (const auto& [n, o] : m.overrides) ov.push_back(json{{"n", n}, {"h", o.h}, {"v", to_json(o.v)}});
  return json{{"h_expr", m.h_src}, {"v_re_expr", m.v_re_src}, {"v_im_expr", m.v_im_src}, {"overrides", ov}};
}

inline json to_json(const seq::AsymptoticClass& c) {
  json j{{"kind", seq::to_string(c.kind)}, {"source", c.symbolic ? "symbolic" : "regression"}};
  if (c.zero) j["identically_zero"] = true;
  if (c.is_term()) {
    j["exponent"] = c.exponent;
    j["log_exponent"] = c.log_exponent;
    j["coefficient"] = c.coefficient;
    if (c.rate != 0.0) j["rate"] = std::isinf(c.rate) ? json(c.rate > 0 ? "+inf" : "-inf") : json(c.rate);
  }
  if (!c.symbolic) j["residual"] = c.residual;
  return j;
}

inline json to_json(const SeriesVerdict& s) {
  return json{{"value", to_string(s.value)},
              {"basis", s.basis},
              {"cutoffs", s.cutoffs},
              {"partial_sums", s.partial_sums},
              {"summand_class", to_json(s.summand_class)}};
}

inline json to_json(const CriterionResult& r) {
  json j{{"verdict", to_string(r.verdict)}, {"evidence", r.evidence}};
  if (r.series) j["series"] = to_json(*r.series);
  if (r.violation) j["violation"] = json{{"n", r.violation->n}, {"h", r.violation->h}, {"v_abs", r.violation->v_abs}};
  if (r.tail_ratio) j["tail_ratio"] = *r.tail_ratio;
  return j;
}

inline json to_json(const Classification& c) {
  return json{{"strongly_continuous", to_string(c.strongly_continuous.verdict)},
              {"implementable", to_string(c.implementable.verdict)},
              {"type_I", to_string(c.type_I.verdict)},
              {"type_II", to_string(c.type_II.verdict)},
              {"evidence",
               json{{"strongly_continuous", to_json(c.strongly_continuous)},
                    {"implementable", to_json(c.implementable)},
                    {"type_I", to_json(c.type_I)},
                    {"type_II", to_json(c.type_II)}}},
              {"notes", c.notes}};
}

inline json to_json(const InfimumReport& r) {
  return json{{"symbol_min", r.symbol_min},
              {"inf_HI", r.inf_HI},
              {"cII_shift", r.cII_shift},
              {"symplectic_eigen_products", r.symplectic_eigen_products},
              {"boundary", r.boundary}};
}

inline json to_json(const ValidationReport& r) {
  return json{{"ok", r.ok}, {"residuals", r.residuals}, {"messages", r.messages}};
}

}  // namespace bogo::io

#endif  // BOGO_IO_HPP
