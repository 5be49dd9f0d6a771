#pragma once

// JSON encoding of inputs and reports. Exact scalars are written as integers
// or "p/q" strings, floats with 17 significant digits, so reports re-parse
// to the same values and are byte-stable for a given input.

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <json.hpp>
#include <string>
#include <vector>

#include "natsu2/classify.hpp"
#include "natsu2/evolution.hpp"
#include "natsu2/families.hpp"
#include "natsu2/oracle.hpp"
#include "natsu2/su2.hpp"

namespace natsu2::io {

using Json = nlohmann::json;

inline Json to_json(const Scalar& s) {
  if (!s.is_exact()) return s.to_double();
  const Rational& r = s.rational();
  if (boost::multiprecision::denominator(r) == 1) {
    const BigInt n = boost::multiprecision::numerator(r);
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
      return n.convert_to<long long>();
  }
  return s.to_string();
}

/// Numbers (integers stay exact) or strings accepted by parse_scalar.
inline Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (j.is_number_unsigned()) return Scalar(static_cast<long long>(j.get<unsigned long long>()));
  if (j.is_number_float()) return Scalar::real(j.get<double>());
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw Error("expected a number or scalar string, got " + j.dump());
}

inline Json to_json(const Quad& q) {
  Json a = Json::array();
  for (const auto& v : q) a.push_back(to_json(v));
  return a;
}

inline Json to_json(const Mat4& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    rows.push_back(r);
  }
  return rows;
}

inline Json to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json(c));
  return a;
}

inline Json to_json(const GeometryParams& g) {
  return {{"K", to_json(g.K())}, {"s2", to_json(g.s2())}, {"s", to_json(g.s())}, {"r", to_json(g.r())}};
}

inline Json to_json(const NaturalStructure& ns) {
  return {{"p", to_json(ns.p)},
          {"a", to_json(ns.a)},
          {"b", to_json(ns.b)},
          {"c", to_json(ns.c)},
          {"geometry", to_json(ns.geom)}};
}

inline Json to_json(const MetricReport& m) {
  return {{"g11", to_json(m.g11)},         {"g13", to_json(m.g13)},
          {"g23", to_json(m.g23)},         {"g33", to_json(m.g33)},
          {"g00", to_json(m.g00)},         {"det", to_json(m.det)},
          {"nu", to_json(m.nu)},           {"positive_definite", m.pd},
          {"g_natural", m.g_natural},      {"matrix", to_json(m.matrix())}};
}

inline Json to_json(const SU2Check& c) {
  return {{"valid", c.valid}, {"nu", to_json(c.nu)}, {"violations", c.violations}};
}

inline Json to_json(const ClassificationFlags& f) {
  return {{"su2_valid", f.su2_valid},
          {"hypo", f.hypo},
          {"contact_hypo", f.contact_hypo},
          {"nearly_hypo", f.nearly_hypo},
          {"double_hypo", f.double_hypo},
          {"sasaki_einstein", f.sasaki_einstein},
          {"omega3_dual", f.omega3_dual},
          {"g_natural", f.g_natural},
          {"residuals", f.residuals},
          {"one_form", "theta~=-2p*theta"}};
}

inline Json to_json(const PreservationFlags& f) {
  Json out = Json::object();
  for (int i = 0; i < 3; ++i) {
    out["Phi" + std::to_string(i + 1)] = {{"preserves_V0", f.fibres[static_cast<std::size_t>(i)]},
                                          {"preserves_H0", f.horizontals[static_cast<std::size_t>(i)]}};
  }
  return out;
}

inline Json to_json(const std::vector<EquationResidual>& eqs) {
  Json out = Json::array();
  for (const auto& e : eqs) out.push_back({{"equation", e.label}, {"residual", e.residual}, {"holds", e.holds}});
  return out;
}

inline Json to_json(const NamedSystemsReport& r) {
  return {{"general_nearly_hypo", to_json(r.general_nearly_hypo)},
          {"general_nearly_hypo_holds", r.general_holds},
          {"type2_hypo", to_json(r.type2_hypo)},
          {"type2_hypo_holds", r.type2_hypo_holds},
          {"omega2^omega3=0", {{"residual", r.omega2_omega3.residual}, {"holds", r.omega2_omega3.holds}}}};
}

inline Json to_json(const InvariantForm& f) {
  Json out = Json::object();
  for (int i = 0; i < kComponentCount; ++i) {
    auto [m, dt] = InvariantForm::component(i);
    const Poly& c = f.coeff(m, dt);
    if (c.is_zero()) continue;
    std::string key(kMonomialName[static_cast<std::size_t>(m)]);
    if (dt) key = key == "1" ? "dt" : key + "^dt";
    out[key] = to_json(c);
  }
  return out;
}

inline Json to_json(const EvolutionState& st) {
  return {{"P", to_json(st.P)},   {"A3", to_json(st.A3)}, {"B0", to_json(st.B0)}, {"B1", to_json(st.B1)},
          {"B2", to_json(st.B2)}, {"C0", to_json(st.C0)}, {"C1", to_json(st.C1)}, {"C2", to_json(st.C2)}};
}

inline Json to_json(const SU3Structure& s) {
  return {{"F", to_json(s.F)}, {"Psi_plus", to_json(s.psi_plus)}, {"Psi_minus", to_json(s.psi_minus)}};
}

inline Json to_json(const IntegrabilityReport& r) {
  return {{"dF", r.dF}, {"dPsi_plus", r.dPsiPlus}, {"dPsi_minus", r.dPsiMinus}, {"exact_zero", r.exact_zero}};
}

inline Json to_json(const oracle::OracleReport& r) {
  return {{"name", r.name},
          {"samples", r.samples},
          {"seed", r.seed},
          {"residuals", r.residuals},
          {"max_residual", r.max_residual},
          {"ad_fd_gap", r.ad_fd_gap},
          {"chart_gap", r.chart_gap}};
}

namespace detail {

inline void dump_string(std::string& out, const std::string& s) { out += Json(s).dump(); }

inline void dump(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        dump_string(out, it.key());
        out += ": ";
        dump(out, it.value(), indent + 2);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool flat = true;
      for (const auto& e : j)
        if (e.is_structured()) flat = false;
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump(out, j[i], indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump(out, j[i], indent + 2);
      }
      out += "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      std::string s = buf;
      if (s.find_first_of(".eE") == std::string::npos) s += ".0";
      out += s;
      return;
    }
    default: out += j.dump(); return;
  }
}

}  // namespace detail

/// Pretty-printed JSON with fixed 17-digit floats and sorted keys.
inline std::string dump(const Json& j) {
  std::string out;
  detail::dump(out, j, 0);
  out += "\n";
  return out;
}

}  // namespace natsu2::io
