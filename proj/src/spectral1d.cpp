#include "smallscale/spectral1d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace smallscale {

SpectralField1D hilbert_transform(const SpectralField1D& f) {
  f.require_finite("hilbert_transform");
  const auto& c = f.coeffs();
  const std::size_t n = f.grid().n;
  std::vector<std::complex<double>> out(c.size());
  out[0] = 0.0;
  for (std::size_t k = 1; k < n / 2; ++k)
    out[k] = std::complex<double>(0.0, -1.0) * c[k];
  out[n / 2] = 0.0;
  return SpectralField1D::from_coeffs(f.grid(), std::move(out));
}

SpectralField1D spectral_derivative(const SpectralField1D& f) {
  f.require_finite("spectral_derivative");
  const auto& c = f.coeffs();
  const std::size_t n = f.grid().n;
  const double two_pi_over_l = 2.0 * std::numbers::pi / f.grid().length;
  std::vector<std::complex<double>> out(c.size());
  out[0] = 0.0;
  for (std::size_t k = 1; k < n / 2; ++k)
    out[k] = std::complex<double>(0.0, two_pi_over_l * static_cast<double>(k)) *
             c[k];
  out[n / 2] = 0.0;
  return SpectralField1D::from_coeffs(f.grid(), std::move(out));
}

SpectralField1D periodic_biot_savart(const SpectralField1D& omega) {
  omega.require_finite("periodic_biot_savart");
  const auto& c = omega.coeffs();
  const std::size_t n = omega.grid().n;
  const double L = omega.grid().length;
  std::vector<std::complex<double>> out(c.size());
  // log|sin t| = -log 2 - sum_{k>=1} cos(2 k t)/k
  out[0] = c[0] * (-L * std::log(2.0) / std::numbers::pi);
  for (std::size_t k = 1; k <= n / 2; ++k)
    out[k] = c[k] * (-L / (2.0 * std::numbers::pi * static_cast<double>(k)));
  return SpectralField1D::from_coeffs(omega.grid(), std::move(out));
}

SpectralField1D dealias(const SpectralField1D& f) {
  f.require_finite("dealias");
  const auto& c = f.coeffs();
  const std::size_t n = f.grid().n;
  const std::size_t cutoff = n / 3;  // keep k <= n/3
  std::vector<std::complex<double>> out(c.size());
  for (std::size_t k = 0; k <= n / 2; ++k)
    out[k] = (k <= cutoff) ? c[k] : 0.0;
  return SpectralField1D::from_coeffs(f.grid(), std::move(out));
}

SpectralField1D multiply_dealiased(const SpectralField1D& a,
                                   const SpectralField1D& b) {
  if (!(a.grid() == b.grid()))
    throw std::invalid_argument("multiply_dealiased: grid mismatch");
  std::vector<double> v(a.grid().n);
  for (std::size_t j = 0; j < v.size(); ++j)
    v[j] = a.values()[j] * b.values()[j];
  return dealias(SpectralField1D::from_values(a.grid(), std::move(v)));
}

}  // namespace smallscale
