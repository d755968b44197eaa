#pragma once

#include <cstdint>
#include <string>

namespace smallscale {

// Fully validated run configuration. Parsed from flat TOML-style text with
// strict unknown-key rejection; see parse_config.
struct RunSpec {
  std::string model;         // clm | degregorio | hl | cky | euler2d |
                             // boussinesq | sqg_patch
  std::string data = "default";

  // resolution
  std::size_t n = 256;       // 1D node count
  std::size_t n_r = 128;     // disk radial cells
  std::size_t n_theta = 256; // disk angular cells
  std::size_t n_x = 256;     // strip
  std::size_t n_y = 64;
  double node_spacing = 0.04;  // contour target spacing

  // time stepping
  double t_end = 1.0;
  double dt_init = 1e-3;
  double dt_min = 1e-10;
  double dt_max = 0.1;
  double cfl = 0.4;
  bool fixed_dt = false;
  double blowup_cap = 1e6;
  std::size_t max_steps = 2000000;

  // model parameters
  double length = 6.283185307179586;  // L
  double height = 3.141592653589793;  // strip H
  double amplitude = 10000.0;         // A
  double alpha = 0.04;
  double eps = 0.05;
  double eps_s = 0.05;
  double delta_alpha = 0.05;
  double gamma = 0.5235987755982988;  // pi/6
  double delta = 0.2;
  std::size_t trackers = 9;

  // output
  double snapshot_interval = 0.0;  // 0 disables snapshots
  std::uint64_t seed = 12345;

  bool operator==(const RunSpec&) const = default;
};

// Parses the strict flat TOML subset (key = value; strings, numbers,
// booleans; # comments). Unknown keys, bad types, and out-of-range values
// are rejected with the key named in the message.
RunSpec parse_config(const std::string& text);

std::string serialize_config(const RunSpec& spec);

// Range validation shared by parse_config; throws std::invalid_argument.
void validate_spec(const RunSpec& spec);

}  // namespace smallscale
