// natsu2: construct, classify and verify natural SU(2)-structures on tangent
// sphere bundles. Reports are JSON on stdout (or --out); exit code 0 on
// success, 2 when an input violates a defining equation, 1 otherwise.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "natsu2/cli.hpp"

namespace {

using natsu2::cli::Json;

struct Flag {
  const char* name;
  const char* help;
};

// Per-command payload keys that can be given as flags.
const std::map<std::string, std::vector<Flag>>& command_flags() {
  static const std::vector<Flag> kStructure = {
      {"p", "theta~ = -2p theta"},          {"a", "omega1 coefficients a0,a1,a2,a3"},
      {"b", "omega2 coefficients b0,b1,b2,b3"}, {"c", "omega3 coefficients c0,c1,c2,c3"},
      {"K", "sectional curvature"},         {"s", "sphere radius"},
      {"s2", "squared sphere radius"}};
  static const std::map<std::string, std::vector<Flag>> kFlags = {
      {"classify", kStructure},
      {"metric", kStructure},
      {"solve-type1", {{"X", ""}, {"Y", ""}, {"A", ""}, {"B", "B > 0"}, {"K", ""}, {"s", ""}, {"s2", ""}}},
      {"solve-type1-nh", {{"b0", ""}, {"b1", ""}, {"b2", ""}, {"K", ""}, {"s", ""}, {"s2", ""}}},
      {"solve-se", {{"s", ""}, {"s2", ""}, {"b2", "|b2| <= 1/(3 s^2)"}, {"signQ", "+1 or -1"}}},
      {"solve-type2",
       {{"a0", ""}, {"a2", ""}, {"a3", ""}, {"p", ""}, {"b0", ""}, {"sign_b1", "+1 or -1"},
        {"s", "optional radius, cross-checked"}, {"s2", "optional squared radius"}}},
      {"evolve-flat",
       {{"p", ""}, {"a4", ""}, {"b0", ""}, {"c0", ""}, {"b4", ""}, {"c4", ""}, {"b5", ""}, {"c5", ""},
        {"s", ""}, {"s2", ""}, {"t_end", "CSV sampling end time"}, {"step", "CSV sampling step"}}},
      {"evolve-numeric",
       {{"K", ""}, {"s", ""}, {"s2", ""}, {"p", "constant P"}, {"P", "P(t) coefficients, lowest power first"},
        {"a3", ""}, {"b", "B0,B1,B2 at t=0"}, {"c", "C0,C1,C2 at t=0"}, {"t_end", ""}, {"step", ""}}},
      {"verify-oracle", {}},
      {"verify-su3", {}},
  };
  return kFlags;
}

const std::map<std::string, std::string> kDescriptions = {
    {"classify", "SU(2) validity, hypo classes and residuals of a structure"},
    {"metric", "closed-form metric, contraction cross-check and Phi matrices"},
    {"solve-type1", "type I structure from a point (X, Y, A, B) on the surface"},
    {"solve-type1-nh", "type I nearly-hypo structure from b0, b1, b2"},
    {"solve-se", "member of the Sasaki-Einstein family with its conical lift"},
    {"solve-type2", "type II double-hypo structure; derives s^4 and K"},
    {"evolve-flat", "exact flat evolution and integrability of the lift"},
    {"evolve-numeric", "RK4 integration of the evolution system"},
    {"verify-oracle", "coordinate check of the structure equations"},
    {"verify-su3", "coordinate and symbolic check of the flat lift"},
};

Json flag_value(const std::string& text) {
  if (text.find(',') == std::string::npos) return text;
  Json arr = Json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) arr.push_back(item);
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Natural SU(2)-structures on tangent sphere bundles"};
  app.require_subcommand(1);

  std::string config_path, out_path, csv_path;
  double tol = natsu2::kDefaultTolerance;
  int samples = 100;
  std::uint64_t seed = 0;
  std::map<std::string, std::map<std::string, std::string>> flag_values;

  for (const auto& name : natsu2::cli::commands()) {
    CLI::App* sub = app.add_subcommand(name, kDescriptions.at(name));
    sub->add_option("--config", config_path, "JSON payload file");
    sub->add_option("--tol", tol, "absolute tolerance for float comparisons");
    sub->add_option("--out", out_path, "write the JSON report here instead of stdout");
    if (name == "verify-oracle" || name == "verify-su3") {
      sub->add_option("--samples", samples, "number of random chart points");
      sub->add_option("--seed", seed, "random seed");
    }
    if (name.rfind("evolve", 0) == 0) sub->add_option("--csv", csv_path, "write the trajectory CSV here");
    for (const auto& f : command_flags().at(name))
      sub->add_option(std::string("--") + f.name, flag_values[name][f.name], f.help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : natsu2::cli::kInternal;
  }

  CLI::App* sub = app.get_subcommands().front();
  natsu2::cli::RunConfig cfg;
  cfg.command = sub->get_name();
  cfg.tol = tol;
  cfg.samples = samples;
  cfg.seed = seed;
  if (!csv_path.empty()) cfg.csv_path = csv_path;

  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "natsu2: cannot open config '" << config_path << "'\n";
      return natsu2::cli::kInternal;
    }
    try {
      cfg.payload = Json::parse(in);
    } catch (const Json::parse_error& e) {
      std::cerr << "natsu2: malformed config: " << e.what() << "\n";
      return natsu2::cli::kInternal;
    }
    if (!cfg.payload.is_object()) {
      std::cerr << "natsu2: config must be a JSON object\n";
      return natsu2::cli::kInternal;
    }
  }
  for (const auto& [key, value] : flag_values[cfg.command])
    if (sub->count("--" + key) > 0) cfg.payload[key] = flag_value(value);
  try {
    if (cfg.payload.contains("samples")) cfg.samples = cfg.payload["samples"].get<int>();
    if (cfg.payload.contains("seed")) cfg.seed = cfg.payload["seed"].get<std::uint64_t>();
  } catch (const Json::exception& e) {
    std::cerr << "natsu2: bad samples/seed in config: " << e.what() << "\n";
    return natsu2::cli::kInternal;
  }
  // only the verify commands carry --samples and --seed
  if (auto* o = sub->get_option_no_throw("--samples"); o && o->count() > 0) cfg.samples = samples;
  if (auto* o = sub->get_option_no_throw("--seed"); o && o->count() > 0) cfg.seed = seed;

  auto result = natsu2::cli::run(cfg);
  const std::string text = natsu2::io::dump(result.report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream(out_path) << text;
  }
  if (cfg.csv_path && !result.csv.empty()) std::ofstream(*cfg.csv_path) << result.csv;
  if (result.exit_code == natsu2::cli::kInternal)
    std::cerr << "natsu2: " << result.report.value("detail", std::string("error")) << "\n";
  return result.exit_code;
}
