#pragma once

// Command dispatch behind the natsu2 executable. A RunConfig carries the
// command name and a JSON payload whose keys mirror the coefficient names
// (a0..a3 or "a": [...], b, c, p, K, s or s2, X, Y, A, B, ...).

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "natsu2/io.hpp"

namespace natsu2::cli {

using io::Json;

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> kCommands = {
      "classify",  "metric",      "solve-type1",    "solve-type1-nh", "solve-se",
      "solve-type2", "evolve-flat", "evolve-numeric", "verify-oracle",  "verify-su3"};
  return kCommands;
}

struct RunConfig {
  std::string command;
  Json payload = Json::object();
  double tol = kDefaultTolerance;
  int samples = 100;
  std::uint64_t seed = 0;
  std::optional<std::string> csv_path;
};

struct RunResult {
  int exit_code = 0;
  Json report;
  std::string csv;  // trajectory CSV for evolve commands
};

enum ExitCode : int { kOk = 0, kInternal = 1, kConstraint = 2 };

/// Payload accessor with schema errors reported as natsu2::Error.
class Payload {
 public:
  explicit Payload(const Json& j) : j_(j) {
    if (!j_.is_object()) throw Error("payload must be a JSON object");
  }

  bool has(const std::string& key) const { return j_.contains(key) && !j_.at(key).is_null(); }

  Scalar scalar(const std::string& key) const {
    if (!has(key)) throw Error("missing field '" + key + "'");
    try {
      return io::scalar_from_json(j_.at(key));
    } catch (const Error& e) {
      throw Error("field '" + key + "': " + e.what());
    }
  }
  Scalar scalar_or(const std::string& key, const Scalar& fallback) const {
    return has(key) ? scalar(key) : fallback;
  }
  std::optional<Scalar> optional_scalar(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return scalar(key);
  }
  int sign(const std::string& key) const {
    if (!has(key)) return 1;
    Scalar s = scalar(key);
    if (s == Scalar(1)) return 1;
    if (s == Scalar(-1)) return -1;
    throw Error("field '" + key + "' must be +1 or -1");
  }
  double number_or(const std::string& key, double fallback) const {
    return has(key) ? scalar(key).to_double() : fallback;
  }

  /// "a": [a0, a1, a2(, a3)] or separate keys a0..a3; a missing fourth entry is 0.
  Quad quad(const std::string& name) const {
    Quad q{};
    if (has(name)) {
      const Json& arr = j_.at(name);
      if (!arr.is_array() || arr.size() < 3 || arr.size() > 4)
        throw Error("field '" + name + "' must be an array of 3 or 4 scalars");
      for (std::size_t i = 0; i < arr.size(); ++i) q[i] = io::scalar_from_json(arr[i]);
      return q;
    }
    for (int i = 0; i < 4; ++i) {
      const std::string key = name + std::to_string(i);
      if (i == 3 && !has(key)) break;
      q[static_cast<std::size_t>(i)] = scalar(key);
    }
    return q;
  }

  /// The squared radius from "s2" or "s".
  Scalar s2() const {
    if (has("s2")) return scalar("s2");
    if (has("s")) {
      Scalar s = scalar("s");
      if (!is_positive(s, 0.0)) throw ConstraintViolation("s>0", "radius must be positive");
      return s * s;
    }
    throw Error("missing field 's' (or 's2')");
  }
  std::optional<Scalar> optional_s2() const {
    if (!has("s2") && !has("s")) return std::nullopt;
    return s2();
  }
  GeometryParams geometry() const { return GeometryParams::from_radius_squared(scalar("K"), s2()); }

  NaturalStructure structure() const {
    return {scalar_or("p", 1), quad("a"), quad("b"), quad("c"), geometry()};
  }

 private:
  const Json& j_;
};

namespace detail {

inline Json structure_report(const NaturalStructure& ns, double tol) {
  Json r;
  r["structure"] = io::to_json(ns);
  r["su2_check"] = io::to_json(check_su2(ns, tol));
  r["classification"] = io::to_json(classify(ns, tol));
  r["curvature_guards"] = curvature_guards(ns, tol);
  r["metric"] = io::to_json(metric_closed_form(ns, tol));
  return r;
}

inline Json cmd_classify(const RunConfig& cfg) {
  Payload in(cfg.payload);
  return structure_report(in.structure(), cfg.tol);
}

inline Json cmd_metric(const RunConfig& cfg) {
  Payload in(cfg.payload);
  const NaturalStructure ns = in.structure();
  const MetricReport m = metric_closed_form(ns, cfg.tol);
  Json r;
  r["structure"] = io::to_json(ns);
  r["metric"] = io::to_json(m);
  const SU2Check chk = check_su2(ns, cfg.tol);
  r["su2_check"] = io::to_json(chk);
  if (!m.nu.is_zero(cfg.tol)) {
    const Mat4 contraction = contraction_matrix(ns);
    r["contraction_matrix"] = io::to_json(contraction);
    r["nu*contraction=closed_form"] = mat::equals(mat::scale(m.nu, contraction), m.matrix(), cfg.tol);
  }
  r["preservation"] = io::to_json(preservation_flags(ns, cfg.tol));
  if (chk.valid) {
    Json phis = Json::array();
    for (const auto& phi : phi_matrices(ns, cfg.tol)) phis.push_back(io::to_json(phi));
    r["phi"] = phis;
  }
  return r;
}

inline Json cmd_solve_type1(const RunConfig& cfg) {
  Payload in(cfg.payload);
  TypeIParams tp{in.scalar("X"), in.scalar("Y"), in.scalar("A"), in.scalar("B")};
  Json r = structure_report(type1_from_parameters(tp, in.geometry(), cfg.tol), cfg.tol);
  r["input"] = cfg.payload;
  return r;
}

inline Json cmd_solve_type1_nh(const RunConfig& cfg) {
  Payload in(cfg.payload);
  auto ns = type1_nearly_hypo(in.scalar("b0"), in.scalar("b1"), in.scalar("b2"), in.geometry(), cfg.tol);
  Json r = structure_report(ns, cfg.tol);
  r["input"] = cfg.payload;
  r["named_systems"] = io::to_json(verify_named_systems(ns, cfg.tol));
  return r;
}

inline Json cmd_solve_se(const RunConfig& cfg) {
  Payload in(cfg.payload);
  auto ns = sasaki_einstein_family(in.s2(), in.scalar("b2"), in.sign("signQ"), cfg.tol);
  Json r = structure_report(ns, cfg.tol);
  r["input"] = cfg.payload;
  auto lift = build_su3_conical(ns, cfg.tol);
  r["conical_su3"] = io::to_json(lift);
  r["conical_integrability"] = io::to_json(check_integrable(lift, ns.geom));
  return r;
}

inline Json cmd_solve_type2(const RunConfig& cfg) {
  Payload in(cfg.payload);
  TypeIIParams tp{in.scalar("a0"), in.scalar("a2"), in.scalar("a3"), in.scalar("p"), in.scalar("b0"),
                  in.sign("sign_b1")};
  auto sol = type2_double_hypo(tp, in.optional_s2(), cfg.tol);
  Json r = structure_report(sol.ns, cfg.tol);
  r["input"] = cfg.payload;
  r["s4"] = io::to_json(sol.s4);
  r["K"] = io::to_json(sol.ns.geom.K());
  r["named_systems"] = io::to_json(verify_named_systems(sol.ns, cfg.tol));
  r["preservation"] = io::to_json(preservation_flags(sol.ns, cfg.tol));
  return r;
}

inline std::string sampled_csv(const EvolutionState& st, double t_end, double step) {
  Trajectory tr;
  const long n = std::max(1L, std::lround(t_end / step));
  for (long k = 0; k <= n; ++k) {
    const double t = t_end * static_cast<double>(k) / static_cast<double>(n);
    NumericState y = numeric_state_at(st, t);
    tr.samples.push_back({t, st.P(t), y, natsu2::detail::numeric_constraints(y)});
  }
  std::ostringstream os;
  write_csv(os, tr);
  return os.str();
}

inline Json cmd_evolve_flat(const RunConfig& cfg, std::string& csv) {
  Payload in(cfg.payload);
  FlatInit fi{in.scalar("p"),  in.scalar("a4"), in.scalar("b0"), in.scalar("c0"),
              in.scalar("b4"), in.scalar("c4"), in.scalar("b5"), in.scalar("c5")};
  const Scalar s2 = in.s2();
  const auto st = flat_solution(fi, s2, cfg.tol);
  const auto geom = GeometryParams::from_radius_squared(0, s2);
  Json r;
  r["input"] = cfg.payload;
  r["state"] = io::to_json(st);
  Json res = Json::object();
  bool all_zero = true;
  const auto residuals = evolution_residuals(st, geom);
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    res[EvolutionRhs::kLabels[i]] = io::to_json(residuals[i]);
    all_zero = all_zero && residuals[i].is_zero();
  }
  r["evolution_residuals"] = res;
  r["evolution_residuals_zero"] = all_zero;
  Json cons = Json::array();
  for (const auto& c : constraint_residuals(st)) cons.push_back(io::to_json(c));
  r["constraint_residuals"] = cons;
  const auto su3 = build_su3(st);
  r["su3"] = io::to_json(su3);
  r["integrability"] = io::to_json(check_integrable(su3, geom));
  if (cfg.csv_path) csv = sampled_csv(st, in.number_or("t_end", 1.0), in.number_or("step", 0.01));
  return r;
}

inline Json cmd_evolve_numeric(const RunConfig& cfg, std::string& csv, int& exit_code) {
  Payload in(cfg.payload);
  const auto geom = in.geometry();
  TimeFunction P = TimeFunction::constant(in.number_or("p", 1.0));
  if (cfg.payload.contains("P")) {
    const Json& pj = cfg.payload.at("P");
    std::vector<Scalar> coeffs;
    if (pj.is_array())
      for (const auto& c : pj) coeffs.push_back(io::scalar_from_json(c));
    else
      coeffs.push_back(io::scalar_from_json(pj));
    P = TimeFunction::from_poly(Poly(coeffs));
  }
  const Quad b = in.quad("b"), c = in.quad("c");
  NumericState init{in.scalar("a3").to_double(), b[0].to_double(), b[1].to_double(), b[2].to_double(),
                    c[0].to_double(),            c[1].to_double(), c[2].to_double()};
  const double t_end = in.number_or("t_end", 1.0), step = in.number_or("step", 1e-3);
  const auto tr = integrate_numeric(init, P, geom, t_end, step);
  Json r;
  r["input"] = cfg.payload;
  r["steps"] = static_cast<long>(tr.samples.size()) - 1;
  const auto& last = tr.samples.back();
  r["final"] = {{"t", last.t}, {"P", last.P},       {"A3", last.y[0]}, {"B0", last.y[1]}, {"B1", last.y[2]},
                {"B2", last.y[3]}, {"C0", last.y[4]}, {"C1", last.y[5]}, {"C2", last.y[6]}};
  r["max_constraint_drift"] = tr.max_drift;
  r["halted"] = tr.halted;
  if (tr.halted) {
    r["status"] = "constraint_violation";
    r["equation"] = "A3>0";
    r["detail"] = tr.diagnostic;
    exit_code = kConstraint;
  }
  if (cfg.csv_path) {
    std::ostringstream os;
    write_csv(os, tr);
    csv = os.str();
  }
  return r;
}

inline Json cmd_verify_su3(const RunConfig& cfg) {
  Json r;
  r["oracle"] = io::to_json(oracle::verify_flat_su3(cfg.samples, cfg.seed));
  const Scalar half = Scalar::fraction(1, 2);
  const auto st = flat_solution({half, 0, -1, 0, 0, 0, 0, 0}, 1, cfg.tol);
  const auto su3 = build_su3(st);
  r["symbolic"] = {{"su3", io::to_json(su3)},
                   {"integrability", io::to_json(check_integrable(su3, GeometryParams::from_radius(0, 1)))}};
  return r;
}

}  // namespace detail

/// Runs one command. Constraint violations map to exit code 2 with the
/// violated equation in the report; any other failure is exit code 1.
inline RunResult run(const RunConfig& cfg) {
  RunResult res;
  Json report;
  try {
    int code = kOk;
    const std::string& c = cfg.command;
    if (c == "classify") report = detail::cmd_classify(cfg);
    else if (c == "metric") report = detail::cmd_metric(cfg);
    else if (c == "solve-type1") report = detail::cmd_solve_type1(cfg);
    else if (c == "solve-type1-nh") report = detail::cmd_solve_type1_nh(cfg);
    else if (c == "solve-se") report = detail::cmd_solve_se(cfg);
    else if (c == "solve-type2") report = detail::cmd_solve_type2(cfg);
    else if (c == "evolve-flat") report = detail::cmd_evolve_flat(cfg, res.csv);
    else if (c == "evolve-numeric") report = detail::cmd_evolve_numeric(cfg, res.csv, code);
    else if (c == "verify-oracle") report = io::to_json(oracle::verify_flat_system(cfg.samples, cfg.seed));
    else if (c == "verify-su3") report = detail::cmd_verify_su3(cfg);
    else throw Error("unknown command '" + c + "'");
    if (!report.contains("status")) report["status"] = "ok";
    res.exit_code = code;
  } catch (const ConstraintViolation& e) {
    report = {{"status", "constraint_violation"}, {"equation", e.label()}, {"detail", e.what()}};
    res.exit_code = kConstraint;
  } catch (const std::exception& e) {
    report = {{"status", "error"}, {"detail", e.what()}};
    res.exit_code = kInternal;
  }
  report["command"] = cfg.command;
  report["tolerance"] = cfg.tol;
  res.report = std::move(report);
  return res;
}

}  // namespace natsu2::cli
