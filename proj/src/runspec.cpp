#include "smallscale/runspec.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "smallscale/fft.hpp"
#include "smallscale/timeseries.hpp"

namespace smallscale {

namespace {

struct RawValue {
  enum Kind { string_v, number_v, bool_v } kind;
  std::string s;
  double num = 0.0;
  bool b = false;
};

std::string strip_comment(const std::string& line) {
  bool in_quote = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_quote = !in_quote;
    if (line[i] == '#' && !in_quote) return line.substr(0, i);
  }
  return line;
}

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.pop_back();
  return s;
}

RawValue parse_value(const std::string& key, const std::string& raw) {
  if (raw.empty())
    throw std::invalid_argument("config key '" + key + "': missing value");
  RawValue v;
  if (raw.front() == '"') {
    if (raw.size() < 2 || raw.back() != '"')
      throw std::invalid_argument("config key '" + key +
                                  "': unterminated string");
    v.kind = RawValue::string_v;
    v.s = raw.substr(1, raw.size() - 2);
    return v;
  }
  if (raw == "true" || raw == "false") {
    v.kind = RawValue::bool_v;
    v.b = (raw == "true");
    return v;
  }
  if (raw.front() == '[')
    throw std::invalid_argument("config key '" + key +
                                "': arrays are not supported");
  char* end = nullptr;
  v.num = std::strtod(raw.c_str(), &end);
  if (end == raw.c_str() || *end != '\0')
    throw std::invalid_argument("config key '" + key + "': bad value '" +
                                raw + "'");
  v.kind = RawValue::number_v;
  return v;
}

double need_number(const std::map<std::string, RawValue>& kv,
                   const std::string& key, double fallback) {
  auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  if (it->second.kind != RawValue::number_v)
    throw std::invalid_argument("config key '" + key + "': expected a number");
  return it->second.num;
}

std::size_t need_size(const std::map<std::string, RawValue>& kv,
                      const std::string& key, std::size_t fallback) {
  auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  if (it->second.kind != RawValue::number_v)
    throw std::invalid_argument("config key '" + key + "': expected a number");
  const double d = it->second.num;
  if (d < 0.0 || d != std::floor(d))
    throw std::invalid_argument("config key '" + key +
                                "': expected a non-negative integer");
  return static_cast<std::size_t>(d);
}

std::string need_string(const std::map<std::string, RawValue>& kv,
                        const std::string& key, const std::string& fallback) {
  auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  if (it->second.kind != RawValue::string_v)
    throw std::invalid_argument("config key '" + key + "': expected a string");
  return it->second.s;
}

bool need_bool(const std::map<std::string, RawValue>& kv,
               const std::string& key, bool fallback) {
  auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  if (it->second.kind != RawValue::bool_v)
    throw std::invalid_argument("config key '" + key + "': expected a boolean");
  return it->second.b;
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "model",      "data",        "n",          "n_r",
      "n_theta",    "n_x",         "n_y",        "node_spacing",
      "t_end",      "dt_init",     "dt_min",     "dt_max",
      "cfl",        "fixed_dt",    "blowup_cap", "max_steps",
      "length",     "height",      "amplitude",  "alpha",
      "eps",        "eps_s",       "delta_alpha", "gamma",
      "delta",      "trackers",    "snapshot_interval", "seed"};
  return keys;
}

}  // namespace

RunSpec parse_config(const std::string& text) {
  std::map<std::string, RawValue> kv;
  std::stringstream ss(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[')
      throw std::invalid_argument(
          "config line " + std::to_string(lineno) +
          ": tables are not supported, use flat keys");
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string raw = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": empty key");
    if (!known_keys().count(key))
      throw std::invalid_argument("unknown config key '" + key + "'");
    if (kv.count(key))
      throw std::invalid_argument("duplicate config key '" + key + "'");
    kv[key] = parse_value(key, raw);
  }

  RunSpec spec;
  spec.model = need_string(kv, "model", "");
  spec.data = need_string(kv, "data", spec.data);
  spec.n = need_size(kv, "n", spec.n);
  spec.n_r = need_size(kv, "n_r", spec.n_r);
  spec.n_theta = need_size(kv, "n_theta", spec.n_theta);
  spec.n_x = need_size(kv, "n_x", spec.n_x);
  spec.n_y = need_size(kv, "n_y", spec.n_y);
  spec.node_spacing = need_number(kv, "node_spacing", spec.node_spacing);
  spec.t_end = need_number(kv, "t_end", spec.t_end);
  spec.dt_init = need_number(kv, "dt_init", spec.dt_init);
  spec.dt_min = need_number(kv, "dt_min", spec.dt_min);
  spec.dt_max = need_number(kv, "dt_max", spec.dt_max);
  spec.cfl = need_number(kv, "cfl", spec.cfl);
  spec.fixed_dt = need_bool(kv, "fixed_dt", spec.fixed_dt);
  spec.blowup_cap = need_number(kv, "blowup_cap", spec.blowup_cap);
  spec.max_steps = need_size(kv, "max_steps", spec.max_steps);
  spec.length = need_number(kv, "length", spec.length);
  spec.height = need_number(kv, "height", spec.height);
  spec.amplitude = need_number(kv, "amplitude", spec.amplitude);
  spec.alpha = need_number(kv, "alpha", spec.alpha);
  spec.eps = need_number(kv, "eps", spec.eps);
  spec.eps_s = need_number(kv, "eps_s", spec.eps_s);
  spec.delta_alpha = need_number(kv, "delta_alpha", spec.delta_alpha);
  spec.gamma = need_number(kv, "gamma", spec.gamma);
  spec.delta = need_number(kv, "delta", spec.delta);
  spec.trackers = need_size(kv, "trackers", spec.trackers);
  spec.snapshot_interval =
      need_number(kv, "snapshot_interval", spec.snapshot_interval);
  spec.seed = need_size(kv, "seed", spec.seed);

  validate_spec(spec);
  return spec;
}

void validate_spec(const RunSpec& spec) {
  static const std::set<std::string> models = {
      "clm", "degregorio", "hl", "cky", "euler2d", "boussinesq", "sqg_patch"};
  if (spec.model.empty())
    throw std::invalid_argument("config key 'model': missing required key");
  if (!models.count(spec.model))
    throw std::invalid_argument("config key 'model': unknown model '" +
                                spec.model + "'");
  const bool spectral_1d = spec.model == "clm" || spec.model == "degregorio" ||
                           spec.model == "hl";
  if (spectral_1d && (spec.n < 8 || !is_power_of_two(spec.n)))
    throw std::invalid_argument(
        "config key 'n': must be a power of two >= 8 for spectral models");
  if (spec.model == "cky" && spec.n < 64)
    throw std::invalid_argument("config key 'n': cky needs n >= 64");
  if (spec.model == "euler2d" || spec.model == "boussinesq") {
    if (!is_power_of_two(spec.n_theta))
      throw std::invalid_argument("config key 'n_theta': must be a power of two");
    if (spec.n_r < 32)
      throw std::invalid_argument("config key 'n_r': must be >= 32");
    if (!is_power_of_two(spec.n_x))
      throw std::invalid_argument("config key 'n_x': must be a power of two");
    if (spec.n_y < 32)
      throw std::invalid_argument("config key 'n_y': must be >= 32");
  }
  if (spec.model == "sqg_patch") {
    if (!(spec.alpha >= 0.0 && spec.alpha < 0.5))
      throw std::invalid_argument(
          "config key 'alpha': alpha out of range [0, 0.5)");
    if (!(spec.eps > 0.0 && spec.eps < 0.1))
      throw std::invalid_argument("config key 'eps': must lie in (0, 0.1)");
    if (!(spec.node_spacing > 0.0))
      throw std::invalid_argument("config key 'node_spacing': must be positive");
  }
  if (!(spec.t_end > 0.0))
    throw std::invalid_argument("config key 't_end': must be positive");
  if (!(spec.dt_min > 0.0) || !(spec.dt_max >= spec.dt_min))
    throw std::invalid_argument(
        "config key 'dt_min'/'dt_max': need 0 < dt_min <= dt_max");
  if (!(spec.dt_init > 0.0))
    throw std::invalid_argument("config key 'dt_init': must be positive");
  if (!(spec.cfl > 0.0 && spec.cfl <= 4.0))
    throw std::invalid_argument("config key 'cfl': must lie in (0, 4]");
  if (!(spec.length > 0.0))
    throw std::invalid_argument("config key 'length': must be positive");
  if (!(spec.height > 0.0))
    throw std::invalid_argument("config key 'height': must be positive");
  if (spec.trackers > 16)
    throw std::invalid_argument("config key 'trackers': at most 16");
  if (!(spec.gamma > 0.0 && spec.gamma < 1.5707963267948966))
    throw std::invalid_argument("config key 'gamma': must lie in (0, pi/2)");
}

std::string serialize_config(const RunSpec& s) {
  std::ostringstream out;
  out << "model = \"" << s.model << "\"\n";
  out << "data = \"" << s.data << "\"\n";
  out << "n = " << s.n << "\n";
  out << "n_r = " << s.n_r << "\n";
  out << "n_theta = " << s.n_theta << "\n";
  out << "n_x = " << s.n_x << "\n";
  out << "n_y = " << s.n_y << "\n";
  out << "node_spacing = " << format_double(s.node_spacing) << "\n";
  out << "t_end = " << format_double(s.t_end) << "\n";
  out << "dt_init = " << format_double(s.dt_init) << "\n";
  out << "dt_min = " << format_double(s.dt_min) << "\n";
  out << "dt_max = " << format_double(s.dt_max) << "\n";
  out << "cfl = " << format_double(s.cfl) << "\n";
  out << "fixed_dt = " << (s.fixed_dt ? "true" : "false") << "\n";
  out << "blowup_cap = " << format_double(s.blowup_cap) << "\n";
  out << "max_steps = " << s.max_steps << "\n";
  out << "length = " << format_double(s.length) << "\n";
  out << "height = " << format_double(s.height) << "\n";
  out << "amplitude = " << format_double(s.amplitude) << "\n";
  out << "alpha = " << format_double(s.alpha) << "\n";
  out << "eps = " << format_double(s.eps) << "\n";
  out << "eps_s = " << format_double(s.eps_s) << "\n";
  out << "delta_alpha = " << format_double(s.delta_alpha) << "\n";
  out << "gamma = " << format_double(s.gamma) << "\n";
  out << "delta = " << format_double(s.delta) << "\n";
  out << "trackers = " << s.trackers << "\n";
  out << "snapshot_interval = " << format_double(s.snapshot_interval) << "\n";
  out << "seed = " << s.seed << "\n";
  return out.str();
}

}  // namespace smallscale
