#include "hom/experiment/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "hom/errors.hpp"
#include "hom/lattice_scattering.hpp"
#include "hom/state_prep.hpp"

namespace hom {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

template <typename Enum>
struct EnumName {
  Enum value;
  const char* name;
};

constexpr EnumName<Statistics> kStatisticsNames[] = {
    {Statistics::boson, "boson"},
    {Statistics::fermion, "fermion"},
    {Statistics::distinguishable, "distinguishable"}};
constexpr EnumName<InitialState> kInitialStateNames[] = {
    {InitialState::product, "product"}, {InitialState::entangled, "entangled"}};
constexpr EnumName<TimeRule> kTimeRuleNames[] = {
    {TimeRule::border, "border"}, {TimeRule::snapshot, "snapshot"}};

template <typename Enum, std::size_t N>
std::string name_of(const EnumName<Enum> (&table)[N], Enum value) {
  for (const auto& entry : table) {
    if (entry.value == value) return entry.name;
  }
  return "unknown";
}

template <typename Enum, std::size_t N>
Enum parse_enum(const EnumName<Enum> (&table)[N], const std::string& text,
                const char* key) {
  for (const auto& entry : table) {
    if (text == entry.name) return entry.value;
  }
  throw InvalidParameters(std::string("unknown value '") + text +
                          "' for key '" + key + "'");
}

// A grid is either a list of numbers or {"min", "max", "count"}.
std::vector<double> parse_grid(const json& node, const char* key,
                               double scale = 1.0) {
  std::vector<double> out;
  if (node.is_array()) {
    for (const auto& v : node) out.push_back(v.get<double>() * scale);
  } else if (node.is_object()) {
    const double lo = node.at("min").get<double>();
    const double hi = node.at("max").get<double>();
    const int count = node.at("count").get<int>();
    if (count < 1) throw InvalidParameters(std::string(key) + ": count < 1");
    for (int i = 0; i < count; ++i) {
      const double x = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
      out.push_back(x * scale);
    }
  } else if (node.is_number()) {
    out.push_back(node.get<double>() * scale);
  } else {
    throw InvalidParameters(std::string("key '") + key +
                            "' must be a number, list or range");
  }
  return out;
}

SweepConfig base_config() {
  SweepConfig config;
  config.k_grid = default_k_grid();
  config.mu_grid = {2.0};
  config.U_grid = {0.0};
  return config;
}

}  // namespace

std::string to_string(Statistics s) { return name_of(kStatisticsNames, s); }
std::string to_string(InitialState s) {
  return name_of(kInitialStateNames, s);
}
std::string to_string(TimeRule r) { return name_of(kTimeRuleNames, r); }

std::vector<double> default_k_grid(int n) {
  std::vector<double> k;
  for (int i = 0; i < n; ++i) {
    k.push_back(n == 1 ? kPi / 2
                       : kPi / 6 + (4.0 * kPi / 6.0) * i / double(n - 1));
  }
  return k;
}

void SweepConfig::validate() const {
  ModelParams<double>{J, 0.0, 0.0, L}.validate();
  if (k_grid.empty() || mu_grid.empty() || U_grid.empty()) {
    throw InvalidParameters("k, mu and U grids must be nonempty");
  }
  for (double k : k_grid) {
    if (!(k > 0.0 && k < kPi)) {
      throw InvalidParameters("k = " + std::to_string(k) +
                              " outside (0, pi)");
    }
    detail::checked_sin(k, kDefaultSinCutoff);
  }
  if (!(c < 0.0)) throw InvalidParameters("c must be negative");
  if (pair_band < 0) throw InvalidParameters("pair_band must be >= 0");
  if (!(flag_threshold >= 0.0)) {
    throw InvalidParameters("flag_threshold must be >= 0");
  }
  check_placement(WavepacketSpec<double>{k_grid.front(), c, sigma}, L);
}

std::vector<std::string> SweepConfig::warnings() const {
  return geometry_warnings(WavepacketSpec<double>{k_grid.empty() ? kPi / 2
                                                                 : k_grid[0],
                                                  c, sigma});
}

std::vector<std::string> preset_names() {
  return {"fig4", "fig4_fermion", "fig5a", "fig5b", "fig6", "hardcore"};
}

SweepConfig preset(std::string_view name) {
  SweepConfig config = base_config();
  if (name == "fig4") {
    config.mu_grid = {0.5, 1.0, 2.0, 3.0};
  } else if (name == "fig4_fermion") {
    config.mu_grid = {0.5, 1.0, 2.0, 3.0};
    config.statistics = Statistics::fermion;
    config.initial_state = InitialState::entangled;
  } else if (name == "fig5a") {
    config.mu_grid = {-3.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0};
    config.U_grid = {2.0};
  } else if (name == "fig5b") {
    config.mu_grid = {2.0};
    config.U_grid = {-4.0, -2.0, -1.0, 1.0, 2.0, 4.0};
  } else if (name == "fig6") {
    config.k_grid = {3.0 * kPi / 4.0};
    config.mu_grid = {2.0};
    config.U_grid = {2.0};
    config.time_rule = TimeRule::snapshot;
  } else if (name == "hardcore") {
    config.k_grid = {kPi / 2.0};
    config.U_grid = {100.0};
  } else {
    throw InvalidParameters("unknown preset '" + std::string(name) + "'");
  }
  return config;
}

SweepConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidParameters(std::string("config is not valid JSON: ") +
                            e.what());
  }
  if (!doc.is_object()) throw InvalidParameters("config must be an object");

  SweepConfig config = doc.contains("preset")
                           ? preset(doc["preset"].get<std::string>())
                           : base_config();
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "preset") continue;
      if (key == "J") {
        config.J = value.get<double>();
      } else if (key == "L") {
        config.L = value.get<int>();
      } else if (key == "k") {
        config.k_grid = parse_grid(value, "k");
      } else if (key == "k_over_pi") {
        config.k_grid = parse_grid(value, "k_over_pi", kPi);
      } else if (key == "mu") {
        config.mu_grid = parse_grid(value, "mu");
      } else if (key == "U") {
        config.U_grid = parse_grid(value, "U");
      } else if (key == "statistics") {
        config.statistics = parse_enum(kStatisticsNames,
                                       value.get<std::string>(), "statistics");
      } else if (key == "initial_state") {
        config.initial_state = parse_enum(
            kInitialStateNames, value.get<std::string>(), "initial_state");
      } else if (key == "c") {
        config.c = value.get<double>();
      } else if (key == "sigma") {
        config.sigma = value.get<double>();
      } else if (key == "evaluation_time_rule") {
        config.time_rule = parse_enum(kTimeRuleNames, value.get<std::string>(),
                                      "evaluation_time_rule");
      } else if (key == "output") {
        config.output = value.get<std::string>();
      } else if (key == "flag_threshold") {
        config.flag_threshold = value.get<double>();
      } else if (key == "pair_band") {
        config.pair_band = value.get<int>();
      } else if (key == "workers") {
        config.workers = value.get<int>();
      } else {
        throw InvalidParameters("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw InvalidParameters(std::string("bad config value: ") + e.what());
  }
  config.validate();
  return config;
}

SweepConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameters("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace hom
