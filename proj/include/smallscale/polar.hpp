#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace smallscale {

// Cell-centered polar grid on the unit disk: radii r_i = (i+1/2)/N_r keep
// every node off the coordinate singularity at r = 0.
struct PolarGrid {
  std::size_t n_r = 0;
  std::size_t n_theta = 0;

  static PolarGrid make(std::size_t n_r, std::size_t n_theta);

  double dr() const { return 1.0 / static_cast<double>(n_r); }
  double dtheta() const;
  double radius(std::size_t i) const {
    return (static_cast<double>(i) + 0.5) / static_cast<double>(n_r);
  }
  double angle(std::size_t j) const;
  std::size_t idx(std::size_t i, std::size_t j) const {
    return i * n_theta + j;
  }
  std::size_t size() const { return n_r * n_theta; }

  bool operator==(const PolarGrid&) const = default;
};

struct DiskField {
  PolarGrid grid;
  std::vector<double> values;  // row-major [radius][angle]

  static DiskField zero(const PolarGrid& g);
  static DiskField from_function(
      const PolarGrid& g, const std::function<double(double, double)>& f_xy);

  double& at(std::size_t i, std::size_t j) { return values[grid.idx(i, j)]; }
  double at(std::size_t i, std::size_t j) const {
    return values[grid.idx(i, j)];
  }
  double max_abs() const;
};

// Value lookup with the polar wrap rules: negative radial indexes reflect
// through the center onto the opposite angle, indexes past the wall clamp to
// the last ring, angles wrap periodically.
double disk_value(const DiskField& f, long i, long j);

// Angular spectrum, one half-complex row per radius (mode-major layout:
// spec[m * n_r + i]).
std::vector<std::complex<double>> disk_angular_forward(const DiskField& f);
DiskField disk_angular_inverse(const PolarGrid& g,
                               const std::vector<std::complex<double>>& spec);

// L^p norm with the polar area weight (p = 0 means the sup norm).
double disk_lp_norm(const DiskField& f, double p);

// integral of f * g over the disk
double disk_inner(const DiskField& a, const DiskField& b);

}  // namespace smallscale
