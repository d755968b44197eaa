#include "smallscale/polar.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "smallscale/fft.hpp"

namespace smallscale {

PolarGrid PolarGrid::make(std::size_t n_r, std::size_t n_theta) {
  if (n_r < 32) throw std::invalid_argument("PolarGrid: n_r must be >= 32");
  if (n_theta < 8 || !is_power_of_two(n_theta))
    throw std::invalid_argument("PolarGrid: n_theta must be a power of two");
  return PolarGrid{n_r, n_theta};
}

double PolarGrid::dtheta() const {
  return 2.0 * std::numbers::pi / static_cast<double>(n_theta);
}

double PolarGrid::angle(std::size_t j) const {
  return dtheta() * static_cast<double>(j);
}

DiskField DiskField::zero(const PolarGrid& g) {
  return DiskField{g, std::vector<double>(g.size(), 0.0)};
}

DiskField DiskField::from_function(
    const PolarGrid& g, const std::function<double(double, double)>& f_xy) {
  DiskField f = zero(g);
  for (std::size_t i = 0; i < g.n_r; ++i) {
    const double r = g.radius(i);
    for (std::size_t j = 0; j < g.n_theta; ++j) {
      const double th = g.angle(j);
      f.at(i, j) = f_xy(r * std::cos(th), r * std::sin(th));
    }
  }
  return f;
}

double DiskField::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double disk_value(const DiskField& f, long i, long j) {
  const long nr = static_cast<long>(f.grid.n_r);
  const long nt = static_cast<long>(f.grid.n_theta);
  if (i < 0) {
    i = -1 - i;
    j += nt / 2;
  }
  if (i >= nr) i = nr - 1;
  j %= nt;
  if (j < 0) j += nt;
  return f.values[f.grid.idx(static_cast<std::size_t>(i),
                             static_cast<std::size_t>(j))];
}

std::vector<std::complex<double>> disk_angular_forward(const DiskField& f) {
  const auto& g = f.grid;
  const std::size_t nm = g.n_theta / 2 + 1;
  std::vector<std::complex<double>> spec(nm * g.n_r);
  std::vector<std::complex<double>> row(nm);
  auto& fft = FftEngine::instance();
  for (std::size_t i = 0; i < g.n_r; ++i) {
    fft.forward({f.values.data() + i * g.n_theta, g.n_theta}, row);
    for (std::size_t m = 0; m < nm; ++m) spec[m * g.n_r + i] = row[m];
  }
  return spec;
}

DiskField disk_angular_inverse(const PolarGrid& g,
                               const std::vector<std::complex<double>>& spec) {
  const std::size_t nm = g.n_theta / 2 + 1;
  if (spec.size() != nm * g.n_r)
    throw std::invalid_argument("disk_angular_inverse: size mismatch");
  DiskField f = DiskField::zero(g);
  std::vector<std::complex<double>> row(nm);
  auto& fft = FftEngine::instance();
  for (std::size_t i = 0; i < g.n_r; ++i) {
    for (std::size_t m = 0; m < nm; ++m) row[m] = spec[m * g.n_r + i];
    fft.inverse(row, {f.values.data() + i * g.n_theta, g.n_theta});
  }
  return f;
}

double disk_lp_norm(const DiskField& f, double p) {
  if (p == 0.0) return f.max_abs();
  const auto& g = f.grid;
  const double w = g.dr() * g.dtheta();
  double s = 0.0;
  for (std::size_t i = 0; i < g.n_r; ++i) {
    const double r = g.radius(i);
    for (std::size_t j = 0; j < g.n_theta; ++j)
      s += std::pow(std::abs(f.at(i, j)), p) * r * w;
  }
  return std::pow(s, 1.0 / p);
}

double disk_inner(const DiskField& a, const DiskField& b) {
  const auto& g = a.grid;
  if (!(g == b.grid)) throw std::invalid_argument("disk_inner: grid mismatch");
  const double w = g.dr() * g.dtheta();
  double s = 0.0;
  for (std::size_t i = 0; i < g.n_r; ++i) {
    const double r = g.radius(i);
    for (std::size_t j = 0; j < g.n_theta; ++j)
      s += a.at(i, j) * b.at(i, j) * r * w;
  }
  return s;
}

}  // namespace smallscale
