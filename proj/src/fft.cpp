#include "smallscale/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <stdexcept>

namespace smallscale {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

struct FftEngine::Plans {
  std::size_t n = 0;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  double* real_buf = nullptr;
  fftw_complex* cplx_buf = nullptr;

  explicit Plans(std::size_t size) : n(size) {
    real_buf = fftw_alloc_real(n);
    cplx_buf = fftw_alloc_complex(n / 2 + 1);
    fwd = fftw_plan_dft_r2c_1d(static_cast<int>(n), real_buf, cplx_buf,
                               FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_1d(static_cast<int>(n), cplx_buf, real_buf,
                               FFTW_ESTIMATE);
    if (!fwd || !bwd) throw std::runtime_error("fft: plan creation failed");
  }
  ~Plans() {
    if (fwd) fftw_destroy_plan(fwd);
    if (bwd) fftw_destroy_plan(bwd);
    fftw_free(real_buf);
    fftw_free(cplx_buf);
  }
};

FftEngine& FftEngine::instance() {
  static FftEngine engine;
  return engine;
}

FftEngine::~FftEngine() = default;

FftEngine::Plans& FftEngine::plans_for(std::size_t n) {
  if (!is_power_of_two(n) || n < 2)
    throw std::invalid_argument("fft: size must be a power of two >= 2");
  auto it = cache_.find(n);
  if (it == cache_.end())
    it = cache_.emplace(n, std::make_unique<Plans>(n)).first;
  return *it->second;
}

void FftEngine::forward(std::span<const double> values,
                        std::span<std::complex<double>> coeffs) {
  const std::size_t n = values.size();
  if (coeffs.size() != n / 2 + 1)
    throw std::invalid_argument("fft: coefficient span has wrong size");
  std::lock_guard<std::mutex> lock(mutex_);
  Plans& p = plans_for(n);
  std::memcpy(p.real_buf, values.data(), n * sizeof(double));
  fftw_execute(p.fwd);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k <= n / 2; ++k)
    coeffs[k] = std::complex<double>(p.cplx_buf[k][0], p.cplx_buf[k][1]) * scale;
}

void FftEngine::inverse(std::span<const std::complex<double>> coeffs,
                        std::span<double> values) {
  const std::size_t n = values.size();
  if (coeffs.size() != n / 2 + 1)
    throw std::invalid_argument("fft: coefficient span has wrong size");
  std::lock_guard<std::mutex> lock(mutex_);
  Plans& p = plans_for(n);
  for (std::size_t k = 0; k <= n / 2; ++k) {
    p.cplx_buf[k][0] = coeffs[k].real();
    p.cplx_buf[k][1] = coeffs[k].imag();
  }
  fftw_execute(p.bwd);  // unnormalized c2r; coefficients already carry 1/n
  std::memcpy(values.data(), p.real_buf, n * sizeof(double));
}

}  // namespace smallscale
