#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace smallscale {

// Uniform periodic grid on [0, L): nodes x_j = j L / n.
struct PeriodicGrid1D {
  std::size_t n = 0;
  double length = 0.0;

  static PeriodicGrid1D make(std::size_t n, double length);

  double dx() const { return length / static_cast<double>(n); }
  double node(std::size_t j) const {
    return length * static_cast<double>(j) / static_cast<double>(n);
  }
  // mu = pi / L, the half-wavenumber of the fundamental mode.
  double mu() const;

  bool operator==(const PeriodicGrid1D& o) const {
    return n == o.n && length == o.length;
  }
};

// Real periodic field with a lazily cached half-complex spectrum.
class SpectralField1D {
 public:
  SpectralField1D() = default;

  static SpectralField1D from_values(const PeriodicGrid1D& grid,
                                     std::vector<double> values);
  static SpectralField1D from_coeffs(const PeriodicGrid1D& grid,
                                     std::vector<std::complex<double>> coeffs);
  static SpectralField1D from_function(const PeriodicGrid1D& grid,
                                       const std::function<double(double)>& f);
  static SpectralField1D zero(const PeriodicGrid1D& grid);

  const PeriodicGrid1D& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<std::complex<double>>& coeffs() const;

  double max_abs() const;
  double min_value() const;
  double mean() const;
  // Relative L2 difference against another field on the same grid.
  double rel_l2_distance(const SpectralField1D& other) const;

  // Throws std::invalid_argument naming the first non-finite index.
  void require_finite(const std::string& op_name) const;

 private:
  PeriodicGrid1D grid_;
  std::vector<double> values_;
  mutable std::vector<std::complex<double>> coeffs_;
  mutable bool have_coeffs_ = false;
};

}  // namespace smallscale
