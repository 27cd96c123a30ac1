#include "mcp/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mcp/constants.hpp"
#include "mcp/errors.hpp"

namespace mcp {
namespace {

using json = nlohmann::json;

[[noreturn]] void invalid(const std::string& key, const std::string& why) {
  throw ConfigError("invalid config: '" + key + "' " + why);
}

void reject_unknown(const json& obj, const std::string& prefix,
                    const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw ConfigError("invalid config: unknown key '" + prefix + key + "'");
    }
  }
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) invalid(path, "is required");
  return obj.at(key);
}

const json& require_object(const json& obj, const std::string& key) {
  const json& v = require(obj, key, key);
  if (!v.is_object()) invalid(key, "must be an object");
  return v;
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) invalid(path, "must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) invalid(path, "must be finite");
  return x;
}

std::size_t as_count(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    invalid(path, "must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) invalid(path, "must be a string");
  return v.get<std::string>();
}

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

DielectricModel parse_material(const json& m) {
  reject_unknown(m, "material.", {"model", "omega_p_rad_s", "gamma_rad_s"});
  const std::string model = as_string(require(m, "model", "material.model"), "material.model");
  const double wp = as_number(require(m, "omega_p_rad_s", "material.omega_p_rad_s"),
                              "material.omega_p_rad_s");
  if (!(wp > 0.0)) invalid("material.omega_p_rad_s", "must be > 0");
  if (model == "drude") {
    const double g =
        as_number(require(m, "gamma_rad_s", "material.gamma_rad_s"), "material.gamma_rad_s");
    if (!(g >= 0.0)) invalid("material.gamma_rad_s", "must be >= 0");
    return DielectricModel::drude(wp, g);
  }
  if (model == "plasma") {
    if (m.contains("gamma_rad_s")) {
      invalid("material.gamma_rad_s", "is not accepted by the plasma model");
    }
    return DielectricModel::plasma(wp);
  }
  invalid("material.model", "must be \"drude\" or \"plasma\"");
}

template <class Enum>
Enum parse_enum(const json& v, const std::string& path,
                std::initializer_list<std::pair<std::string_view, Enum>> choices) {
  const std::string s = as_string(v, path);
  std::string names;
  for (const auto& [name, value] : choices) {
    if (s == name) return value;
    names += (names.empty() ? "" : ", ") + std::string(name);
  }
  invalid(path, "must be one of: " + names);
}

}  // namespace

std::string_view to_string(AtomState s) {
  switch (s) {
    case AtomState::Thermal: return "thermal";
    case AtomState::Ground: return "ground";
    case AtomState::Excited: return "excited";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::EquilibriumSeries: return "equilibrium_series";
    case Method::ZeroTIntegral: return "zero_T_integral";
    case Method::Eq1Full: return "eq1_full";
    case Method::Eq6Approx: return "eq6_approx";
  }
  return "?";
}

std::string_view to_string(Spacing s) { return s == Spacing::Log ? "log" : "linear"; }

std::vector<double> DistanceGrid::values() const {
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = min_m;
    return out;
  }
  const double last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / last;
    out[i] = spacing == Spacing::Log ? min_m * std::pow(max_m / min_m, f)
                                     : min_m + (max_m - min_m) * f;
  }
  out.back() = max_m;
  return out;
}

std::string SweepConfig::canonical_json() const {
  json j;
  j["material"]["model"] = std::string(material.name());
  j["material"]["omega_p_rad_s"] = material.omega_p();
  if (material.kind() == DielectricModel::Kind::Drude) {
    j["material"]["gamma_rad_s"] = material.gamma();
  }
  j["atom"]["Omega_m_rad_s"] = atom.Omega_m;
  j["atom"]["mu_J_T"] = atom.mu;
  j["state"] = std::string(to_string(state));
  j["method"] = std::string(to_string(method));
  j["L_grid"]["min_m"] = L_grid.min_m;
  j["L_grid"]["max_m"] = L_grid.max_m;
  j["L_grid"]["points"] = L_grid.points;
  j["L_grid"]["spacing"] = std::string(to_string(L_grid.spacing));
  j["T_list_K"] = T_list;
  j["tol"] = tol;
  j["normalize"] = normalize;
  j["tail_switch_terms"] = tail_switch_terms;
  j["max_terms"] = max_terms;
  // Thread count does not change results and is left out of the identity.
  return j.dump();
}

SweepConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error at " + position_of(text, e.byte) + ": " + e.what());
  }
  if (!root.is_object()) throw ConfigError("invalid config: top level must be an object");
  reject_unknown(root, "",
                 {"material", "atom", "state", "method", "L_grid", "T_list_K", "tol",
                  "normalize", "tail_switch_terms", "max_terms", "threads"});

  const DielectricModel material = parse_material(require_object(root, "material"));

  const json& a = require_object(root, "atom");
  reject_unknown(a, "atom.", {"Omega_m_rad_s", "mu_J_T"});
  const double omega_m =
      as_number(require(a, "Omega_m_rad_s", "atom.Omega_m_rad_s"), "atom.Omega_m_rad_s");
  if (!(omega_m > 0.0)) invalid("atom.Omega_m_rad_s", "must be > 0");
  const bool mu_defaulted = !a.contains("mu_J_T");
  const double mu = mu_defaulted ? constants::bohr_magneton : as_number(a.at("mu_J_T"), "atom.mu_J_T");
  if (!(mu > 0.0)) invalid("atom.mu_J_T", "must be > 0");

  SweepConfig cfg(material, TwoLevelAtom(omega_m, mu));
  cfg.mu_defaulted = mu_defaulted;

  cfg.state = parse_enum<AtomState>(require(root, "state", "state"), "state",
                                    {{"thermal", AtomState::Thermal},
                                     {"ground", AtomState::Ground},
                                     {"excited", AtomState::Excited}});
  cfg.method = parse_enum<Method>(require(root, "method", "method"), "method",
                                  {{"equilibrium_series", Method::EquilibriumSeries},
                                   {"zero_T_integral", Method::ZeroTIntegral},
                                   {"eq1_full", Method::Eq1Full},
                                   {"eq6_approx", Method::Eq6Approx}});

  const json& g = require_object(root, "L_grid");
  reject_unknown(g, "L_grid.", {"min_m", "max_m", "points", "spacing"});
  cfg.L_grid.min_m = as_number(require(g, "min_m", "L_grid.min_m"), "L_grid.min_m");
  cfg.L_grid.max_m = as_number(require(g, "max_m", "L_grid.max_m"), "L_grid.max_m");
  cfg.L_grid.points = as_count(require(g, "points", "L_grid.points"), "L_grid.points");
  cfg.L_grid.spacing = g.contains("spacing")
                           ? parse_enum<Spacing>(g.at("spacing"), "L_grid.spacing",
                                                 {{"log", Spacing::Log}, {"linear", Spacing::Linear}})
                           : Spacing::Log;
  if (!(cfg.L_grid.min_m > 0.0)) invalid("L_grid.min_m", "must be > 0");
  if (!(cfg.L_grid.max_m >= cfg.L_grid.min_m)) invalid("L_grid.max_m", "must be >= L_grid.min_m");
  if (cfg.L_grid.points < 1) invalid("L_grid.points", "must be >= 1");

  if (root.contains("T_list_K")) {
    const json& t = root.at("T_list_K");
    if (!t.is_array()) invalid("T_list_K", "must be an array of numbers");
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::string path = "T_list_K[" + std::to_string(i) + "]";
      const double T = as_number(t[i], path);
      if (T < 0.0) invalid(path, "must be >= 0");
      cfg.T_list.push_back(T);
    }
  }

  if (root.contains("tol")) {
    cfg.tol = as_number(root.at("tol"), "tol");
    if (!(cfg.tol > 0.0 && cfg.tol < 1.0)) invalid("tol", "must lie in (0, 1)");
  }
  if (root.contains("normalize")) {
    if (!root.at("normalize").is_boolean()) invalid("normalize", "must be true or false");
    cfg.normalize = root.at("normalize").get<bool>();
  }
  if (root.contains("tail_switch_terms")) {
    cfg.tail_switch_terms = as_count(root.at("tail_switch_terms"), "tail_switch_terms");
    if (cfg.tail_switch_terms != 0 && cfg.tail_switch_terms < 3) {
      invalid("tail_switch_terms", "must be 0 (disabled) or >= 3");
    }
  }
  if (root.contains("max_terms")) {
    cfg.max_terms = as_count(root.at("max_terms"), "max_terms");
    if (cfg.max_terms < 1) invalid("max_terms", "must be >= 1");
  }
  if (root.contains("threads")) {
    cfg.threads = static_cast<unsigned>(as_count(root.at("threads"), "threads"));
  }

  // state / method compatibility
  switch (cfg.state) {
    case AtomState::Thermal:
      if (cfg.method != Method::EquilibriumSeries && cfg.method != Method::ZeroTIntegral) {
        invalid("method", "must be equilibrium_series or zero_T_integral for a thermal atom");
      }
      break;
    case AtomState::Ground:
      if (cfg.method != Method::Eq1Full && cfg.method != Method::Eq6Approx) {
        invalid("method", "must be eq1_full or eq6_approx for a ground-state atom");
      }
      break;
    case AtomState::Excited:
      if (cfg.method != Method::Eq1Full) {
        invalid("method", "must be eq1_full for an excited-state atom");
      }
      break;
  }

  // Temperatures: T = 0 is the zero-temperature integral and only makes
  // sense for a thermal atom.
  if (cfg.method == Method::ZeroTIntegral) {
    for (std::size_t i = 0; i < cfg.T_list.size(); ++i) {
      if (cfg.T_list[i] != 0.0) {
        invalid("T_list_K[" + std::to_string(i) + "]",
                "must be 0 with method zero_T_integral");
      }
    }
    if (cfg.T_list.empty()) cfg.T_list.push_back(0.0);
  } else if (cfg.state != AtomState::Thermal) {
    for (std::size_t i = 0; i < cfg.T_list.size(); ++i) {
      if (!(cfg.T_list[i] > 0.0)) {
        invalid("T_list_K[" + std::to_string(i) + "]", "must be > 0 for a prepared state");
      }
    }
  }
  return cfg;
}

SweepConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read config file " + path.string());
  return parse_config(buf.str());
}

}  // namespace mcp
