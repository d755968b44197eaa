#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace smallscale {

// Real <-> complex transforms on power-of-two sizes (FFTW backend).
// Plans are created with FFTW_ESTIMATE so repeated runs on one platform are
// bit-identical. Coefficients follow the series convention
//   f(x_j) = sum_{k=0..n/2} c_k exp(2 pi i j k / n) + c.c. of k = 1..n/2-1,
// i.e. c_k = (1/n) sum_j f_j exp(-2 pi i j k / n); only k = 0..n/2 stored.
class FftEngine {
 public:
  static FftEngine& instance();

  // values (size n) -> coefficients (size n/2+1)
  void forward(std::span<const double> values,
               std::span<std::complex<double>> coeffs);
  // coefficients (size n/2+1) -> values (size n)
  void inverse(std::span<const std::complex<double>> coeffs,
               std::span<double> values);

  FftEngine(const FftEngine&) = delete;
  FftEngine& operator=(const FftEngine&) = delete;
  ~FftEngine();

 private:
  FftEngine() = default;
  struct Plans;
  Plans& plans_for(std::size_t n);
  std::map<std::size_t, std::unique_ptr<Plans>> cache_;
  std::mutex mutex_;  // guards the cache and the per-size scratch buffers
};

bool is_power_of_two(std::size_t n);

}  // namespace smallscale
