#pragma once

#include "smallscale/field1d.hpp"

namespace smallscale {

// Periodic Hilbert transform via the multiplier -i sgn(k). The mean mode is
// annihilated and so is the Nyquist mode (keeps real data exactly real).
// Sign convention: H sin(2 pi x / L) = -cos(2 pi x / L), which makes the
// log|sin| Biot-Savart velocity below satisfy u_x = H omega discretely.
SpectralField1D hilbert_transform(const SpectralField1D& f);

// d/dx via the multiplier (2 pi i k / L); Nyquist mode zeroed.
SpectralField1D spectral_derivative(const SpectralField1D& f);

// u(x) = (1/pi) int_0^L omega(y) log|sin(mu (x-y))| dy with mu = pi/L,
// evaluated spectrally: mode k != 0 scaled by -L/(2 pi |k|), the mean by
// -L log 2 / pi.
SpectralField1D periodic_biot_savart(const SpectralField1D& omega);

// Two-thirds rule: zero all modes with k > n/3.
SpectralField1D dealias(const SpectralField1D& f);

// Pointwise product followed by dealiasing (quadratic nonlinearities).
SpectralField1D multiply_dealiased(const SpectralField1D& a,
                                   const SpectralField1D& b);

}  // namespace smallscale
