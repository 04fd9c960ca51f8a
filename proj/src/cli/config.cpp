// SPDX-License-Identifier: Apache-2.0

#include "drs/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <variant>

namespace drs::cli {
namespace {

using Value = std::variant<bool, long long, double, std::string>;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

Value parse_value(const std::string& key, const std::string& text) {
  if (text.empty()) throw ConfigError(key, "missing value");
  if (text.front() == '"') {
    if (text.size() < 2 || text.back() != '"') throw ConfigError(key, "unterminated string");
    return text.substr(1, text.size() - 2);
  }
  if (text == "true") return true;
  if (text == "false") return false;
  const char* begin = text.data();
  const char* end = begin + text.size();
  long long integer = 0;
  if (auto [p, ec] = std::from_chars(begin, end, integer); ec == std::errc() && p == end) return integer;
  double number = 0.0;
  if (auto [p, ec] = std::from_chars(begin, end, number); ec == std::errc() && p == end) return number;
  throw ConfigError(key, "cannot parse value '" + text + "'");
}

double as_number(const std::string& key, const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) return *d;
  if (const auto* i = std::get_if<long long>(&v)) return static_cast<double>(*i);
  throw ConfigError(key, "expected a number");
}

long long as_integer(const std::string& key, const Value& v) {
  if (const auto* i = std::get_if<long long>(&v)) return *i;
  throw ConfigError(key, "expected an integer");
}

bool as_bool(const std::string& key, const Value& v) {
  if (const auto* b = std::get_if<bool>(&v)) return *b;
  throw ConfigError(key, "expected true or false");
}

std::string as_string(const std::string& key, const Value& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  throw ConfigError(key, "expected a quoted string");
}

// Fields that default to something derived from other keys.
struct Pending {
  std::optional<double> dx, dy, rsu_x, rsu_y, rsu_z;
};

using Setter = std::function<void(RunConfig&, Pending&, const std::string&, const Value&)>;

template <typename F>
Setter num(F assign) {
  return [assign](RunConfig& c, Pending& p, const std::string& k, const Value& v) { assign(c, p, as_number(k, v)); };
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    // scenario
    t["scenario.arrival_rate"] = num([](RunConfig& c, Pending&, double x) { c.sim.scenario.arrival_rate = x; });
    t["scenario.v2v_rate"] = num([](RunConfig& c, Pending&, double x) { c.sim.scenario.v2v_rate = x; });
    t["scenario.seed"] = [](RunConfig& c, Pending&, const std::string& k, const Value& v) {
      const long long s = as_integer(k, v);
      if (s < 0) throw ConfigError(k, "must be a non-negative integer");
      c.sim.scenario.seed = static_cast<std::uint64_t>(s);
    };
    t["scenario.interferer"] = [](RunConfig& c, Pending&, const std::string& k, const Value& v) {
      const std::string s = as_string(k, v);
      if (s == "rsu") c.sim.scenario.interferer = InterfererKind::rsu;
      else if (s == "vehicle") c.sim.scenario.interferer = InterfererKind::vehicle;
      else if (s == "none") c.sim.scenario.interferer = InterfererKind::none;
      else throw ConfigError(k, "expected \"rsu\", \"vehicle\" or \"none\"");
    };
    t["scenario.rsu_x"] = num([](RunConfig&, Pending& p, double x) { p.rsu_x = x; });
    t["scenario.rsu_y"] = num([](RunConfig&, Pending& p, double x) { p.rsu_y = x; });
    t["scenario.rsu_z"] = num([](RunConfig&, Pending& p, double x) { p.rsu_z = x; });
    // bounds
    t["bounds.x_min"] = num([](RunConfig& c, Pending&, double x) { c.sim.scenario.bounds.x_min = x; });
    t["bounds.x_max"] = num([](RunConfig& c, Pending&, double x) { c.sim.scenario.bounds.x_max = x; });
    t["bounds.y_min"] = num([](RunConfig& c, Pending&, double x) { c.sim.scenario.bounds.y_min = x; });
    t["bounds.y_max"] = num([](RunConfig& c, Pending&, double x) { c.sim.scenario.bounds.y_max = x; });
    t["bounds.z_min"] = num([](RunConfig& c, Pending&, double x) { c.sim.scenario.bounds.z_min = x; });
    t["bounds.z_max"] = num([](RunConfig& c, Pending&, double x) { c.sim.scenario.bounds.z_max = x; });
    // motion
    t["motion.v_drone"] = num([](RunConfig& c, Pending&, double x) { c.sim.scenario.limits.v_drone = x; });
    t["motion.rot_rate"] = num([](RunConfig& c, Pending&, double x) { c.sim.scenario.limits.rot_rate = x; });
    t["motion.time_step"] = num([](RunConfig& c, Pending&, double x) { c.sim.scenario.limits.time_step = x; });
    t["motion.v_vehicle"] = num([](RunConfig& c, Pending&, double x) { c.sim.scenario.limits.v_vehicle = x; });
    // radio
    t["radio.tx_power"] = num([](RunConfig& c, Pending&, double x) { c.sim.radio.tx_power = x; });
    t["radio.noise_power"] = num([](RunConfig& c, Pending&, double x) { c.sim.radio.noise_power = x; });
    t["radio.efficiency"] = num([](RunConfig& c, Pending&, double x) { c.sim.radio.efficiency = x; });
    t["radio.eff_bandwidth"] = num([](RunConfig& c, Pending&, double x) { c.sim.radio.eff_bandwidth = x; });
    t["radio.sinr_form"] = [](RunConfig& c, Pending&, const std::string& k, const Value& v) {
      const std::string s = as_string(k, v);
      if (s == "standard") c.sim.radio.sinr_form = SinrForm::standard;
      else if (s == "paper-literal") c.sim.radio.sinr_form = SinrForm::paper_literal;
      else throw ConfigError(k, "expected \"standard\" or \"paper-literal\"");
    };
    // ris
    t["ris.m_rows"] = [](RunConfig& c, Pending&, const std::string& k, const Value& v) {
      c.sim.ris.m_rows = static_cast<int>(as_integer(k, v));
    };
    t["ris.n_cols"] = [](RunConfig& c, Pending&, const std::string& k, const Value& v) {
      c.sim.ris.n_cols = static_cast<int>(as_integer(k, v));
    };
    t["ris.wavelength"] = num([](RunConfig& c, Pending&, double x) { c.sim.ris.wavelength = x; });
    t["ris.dx"] = num([](RunConfig&, Pending& p, double x) { p.dx = x; });
    t["ris.dy"] = num([](RunConfig&, Pending& p, double x) { p.dy = x; });
    t["ris.gain_tx"] = num([](RunConfig& c, Pending&, double x) { c.sim.ris.gain_tx = x; });
    t["ris.gain_rx"] = num([](RunConfig& c, Pending&, double x) { c.sim.ris.gain_rx = x; });
    t["ris.gain_ris"] = num([](RunConfig& c, Pending&, double x) { c.sim.ris.gain_ris = x; });
    t["ris.amplitude"] = num([](RunConfig& c, Pending&, double x) { c.sim.ris.amplitude = x; });
    // run
    t["run.steps"] = [](RunConfig& c, Pending&, const std::string& k, const Value& v) { c.sim.steps = as_integer(k, v); };
    t["run.orientation_control"] = [](RunConfig& c, Pending&, const std::string& k, const Value& v) {
      c.sim.orientation_control = as_bool(k, v);
    };
    t["run.output_dir"] = [](RunConfig& c, Pending&, const std::string& k, const Value& v) {
      c.output_dir = as_string(k, v);
    };
    return t;
  }();
  return table;
}

// Maps a model validation message ("ris.dx must be > 0") back to its key.
std::string key_of_message(const std::string& message) {
  const auto space = message.find_first_of(" :");
  std::string head = message.substr(0, space);
  if (setters().count(head)) return head;
  return "config";
}

std::string fmt(double x) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

}  // namespace

RunConfig parse_config(std::istream& in) {
  RunConfig config;
  Pending pending;
  std::set<std::string> seen;
  std::string section;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("line " + std::to_string(line_no), "malformed section header");
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no), "expected key = value");
    std::string key = trim(std::string_view(line).substr(0, eq));
    if (!section.empty() && key.find('.') == std::string::npos) key = section + "." + key;
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError(key, "unknown key");
    if (!seen.insert(key).second) throw ConfigError(key, "duplicate key");
    it->second(config, pending, key, parse_value(key, trim(std::string_view(line).substr(eq + 1))));
  }

  RisConfig& ris = config.sim.ris;
  ris.dx = pending.dx.value_or(ris.wavelength / 2.0);
  ris.dy = pending.dy.value_or(ris.wavelength / 2.0);
  ScenarioConfig& sc = config.sim.scenario;
  if (pending.rsu_z) sc.rsu_height = *pending.rsu_z;
  if (pending.rsu_x || pending.rsu_y) {
    const Vec3 center = sc.rsu();
    sc.rsu_position = Vec3{pending.rsu_x.value_or(center.x), pending.rsu_y.value_or(center.y), sc.rsu_height};
  }
  validate(config);
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot open " + path.string());
  return parse_config(in);
}

void validate(const RunConfig& config) {
  try {
    config.sim.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(key_of_message(e.what()), e.what());
  }
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, _] : setters()) keys.push_back(k);
  return keys;
}

const char* to_string(SinrForm form) { return form == SinrForm::paper_literal ? "paper-literal" : "standard"; }
const char* to_string(InterfererKind kind) {
  switch (kind) {
    case InterfererKind::vehicle:
      return "vehicle";
    case InterfererKind::none:
      return "none";
    case InterfererKind::rsu:
    default:
      return "rsu";
  }
}

std::map<std::string, std::string> describe(const RunConfig& config) {
  const SimulationConfig& s = config.sim;
  const ScenarioConfig& sc = s.scenario;
  const Vec3 rsu = sc.rsu();
  return {
      {"scenario.arrival_rate", fmt(sc.arrival_rate)},
      {"scenario.v2v_rate", fmt(sc.v2v_rate)},
      {"scenario.seed", std::to_string(sc.seed)},
      {"scenario.interferer", to_string(sc.interferer)},
      {"scenario.rsu_x", fmt(rsu.x)},
      {"scenario.rsu_y", fmt(rsu.y)},
      {"scenario.rsu_z", fmt(rsu.z)},
      {"bounds.x_min", fmt(sc.bounds.x_min)},
      {"bounds.x_max", fmt(sc.bounds.x_max)},
      {"bounds.y_min", fmt(sc.bounds.y_min)},
      {"bounds.y_max", fmt(sc.bounds.y_max)},
      {"bounds.z_min", fmt(sc.bounds.z_min)},
      {"bounds.z_max", fmt(sc.bounds.z_max)},
      {"motion.v_drone", fmt(sc.limits.v_drone)},
      {"motion.rot_rate", fmt(sc.limits.rot_rate)},
      {"motion.time_step", fmt(sc.limits.time_step)},
      {"motion.v_vehicle", fmt(sc.limits.v_vehicle)},
      {"radio.tx_power", fmt(s.radio.tx_power)},
      {"radio.noise_power", fmt(s.radio.noise_power)},
      {"radio.efficiency", fmt(s.radio.efficiency)},
      {"radio.eff_bandwidth", fmt(s.radio.eff_bandwidth)},
      {"radio.sinr_form", to_string(s.radio.sinr_form)},
      {"ris.m_rows", std::to_string(s.ris.m_rows)},
      {"ris.n_cols", std::to_string(s.ris.n_cols)},
      {"ris.wavelength", fmt(s.ris.wavelength)},
      {"ris.dx", fmt(s.ris.dx)},
      {"ris.dy", fmt(s.ris.dy)},
      {"ris.gain_tx", fmt(s.ris.gain_tx)},
      {"ris.gain_rx", fmt(s.ris.gain_rx)},
      {"ris.gain_ris", fmt(s.ris.gain_ris)},
      {"ris.amplitude", fmt(s.ris.amplitude)},
      {"run.steps", std::to_string(s.steps)},
      {"run.orientation_control", s.orientation_control ? "true" : "false"},
      {"run.output_dir", config.output_dir.string()},
  };
}

}  // namespace drs::cli
