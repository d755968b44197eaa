#include "smallscale/field1d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "smallscale/fft.hpp"

namespace smallscale {

PeriodicGrid1D PeriodicGrid1D::make(std::size_t n, double length) {
  if (n < 8 || !is_power_of_two(n))
    throw std::invalid_argument(
        "PeriodicGrid1D: node count must be a power of two >= 8");
  if (!(length > 0.0) || !std::isfinite(length))
    throw std::invalid_argument("PeriodicGrid1D: length must be positive");
  return PeriodicGrid1D{n, length};
}

double PeriodicGrid1D::mu() const { return std::numbers::pi / length; }

SpectralField1D SpectralField1D::from_values(const PeriodicGrid1D& grid,
                                             std::vector<double> values) {
  if (values.size() != grid.n)
    throw std::invalid_argument("SpectralField1D: values/grid size mismatch");
  SpectralField1D f;
  f.grid_ = grid;
  f.values_ = std::move(values);
  return f;
}

SpectralField1D SpectralField1D::from_coeffs(
    const PeriodicGrid1D& grid, std::vector<std::complex<double>> coeffs) {
  if (coeffs.size() != grid.n / 2 + 1)
    throw std::invalid_argument("SpectralField1D: coeffs/grid size mismatch");
  SpectralField1D f;
  f.grid_ = grid;
  f.values_.resize(grid.n);
  FftEngine::instance().inverse(coeffs, f.values_);
  f.coeffs_ = std::move(coeffs);
  f.have_coeffs_ = true;
  return f;
}

SpectralField1D SpectralField1D::from_function(
    const PeriodicGrid1D& grid, const std::function<double(double)>& f) {
  std::vector<double> v(grid.n);
  for (std::size_t j = 0; j < grid.n; ++j) v[j] = f(grid.node(j));
  return from_values(grid, std::move(v));
}

SpectralField1D SpectralField1D::zero(const PeriodicGrid1D& grid) {
  return from_values(grid, std::vector<double>(grid.n, 0.0));
}

const std::vector<std::complex<double>>& SpectralField1D::coeffs() const {
  if (!have_coeffs_) {
    coeffs_.resize(grid_.n / 2 + 1);
    FftEngine::instance().forward(values_, coeffs_);
    have_coeffs_ = true;
  }
  return coeffs_;
}

double SpectralField1D::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double SpectralField1D::min_value() const {
  double m = values_.empty() ? 0.0 : values_[0];
  for (double v : values_) m = std::min(m, v);
  return m;
}

double SpectralField1D::mean() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s / static_cast<double>(values_.size());
}

double SpectralField1D::rel_l2_distance(const SpectralField1D& other) const {
  if (!(grid_ == other.grid_))
    throw std::invalid_argument("rel_l2_distance: grid mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < values_.size(); ++j) {
    const double d = values_[j] - other.values_[j];
    num += d * d;
    den += other.values_[j] * other.values_[j];
  }
  if (den == 0.0) return std::sqrt(num);
  return std::sqrt(num / den);
}

void SpectralField1D::require_finite(const std::string& op_name) const {
  for (std::size_t j = 0; j < values_.size(); ++j)
    if (!std::isfinite(values_[j]))
      throw std::invalid_argument(op_name + ": non-finite value at index " +
                                  std::to_string(j));
}

}  // namespace smallscale
