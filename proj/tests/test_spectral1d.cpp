#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "smallscale/spectral1d.hpp"

using namespace smallscale;

namespace {

constexpr double kPi = std::numbers::pi;

// Random zero-mean band-limited field: modes 1..n/3 with seeded amplitudes.
SpectralField1D random_band_limited(const PeriodicGrid1D& grid,
                                    std::mt19937_64& rng,
                                    std::size_t max_mode = 0) {
  if (max_mode == 0) max_mode = grid.n / 3;
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<std::complex<double>> c(grid.n / 2 + 1, 0.0);
  for (std::size_t k = 1; k <= max_mode && k < grid.n / 2; ++k)
    c[k] = std::complex<double>(dist(rng), dist(rng)) /
           (1.0 + static_cast<double>(k));
  return SpectralField1D::from_coeffs(grid, std::move(c));
}

double max_abs_diff(const SpectralField1D& a, const SpectralField1D& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.values().size(); ++j)
    m = std::max(m, std::abs(a.values()[j] - b.values()[j]));
  return m;
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_THROWS(PeriodicGrid1D::make(7, 1.0));
  CHECK_THROWS(PeriodicGrid1D::make(48, 1.0));
  CHECK_THROWS(PeriodicGrid1D::make(64, -1.0));
  auto g = PeriodicGrid1D::make(64, 2.0 * kPi);
  CHECK(g.dx() == doctest::Approx(2.0 * kPi / 64).epsilon(1e-15));
  CHECK(g.mu() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("hilbert transform of sin and cos") {
  auto g = PeriodicGrid1D::make(128, 2.0 * kPi);
  auto f = SpectralField1D::from_function(g, [](double x) { return std::sin(x); });
  auto hf = hilbert_transform(f);
  auto expect = SpectralField1D::from_function(g, [](double x) { return -std::cos(x); });
  CHECK(max_abs_diff(hf, expect) < 1e-13);

  auto c = SpectralField1D::from_function(g, [](double x) { return std::cos(x); });
  auto hc = hilbert_transform(c);
  auto expect2 = SpectralField1D::from_function(g, [](double x) { return std::sin(x); });
  CHECK(max_abs_diff(hc, expect2) < 1e-13);
}

TEST_CASE("hilbert annihilates constants and rejects non-finite input") {
  auto g = PeriodicGrid1D::make(64, 1.0);
  auto f = SpectralField1D::from_function(g, [](double) { return 3.25; });
  CHECK(hilbert_transform(f).max_abs() < 1e-14);

  std::vector<double> bad(g.n, 0.0);
  bad[5] = std::nan("");
  auto fb = SpectralField1D::from_values(g, std::move(bad));
  CHECK_THROWS_WITH_AS(hilbert_transform(fb),
                       "hilbert_transform: non-finite value at index 5",
                       std::invalid_argument);
}

TEST_CASE("H(Hf) = -f and skew symmetry on random band-limited fields") {
  auto g = PeriodicGrid1D::make(256, 2.0 * kPi);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_band_limited(g, rng);
    auto hh = hilbert_transform(hilbert_transform(f));
    auto neg = SpectralField1D::from_values(
        g, [&] {
          std::vector<double> v(g.n);
          for (std::size_t j = 0; j < g.n; ++j) v[j] = -f.values()[j];
          return v;
        }());
    CHECK(hh.rel_l2_distance(neg) < 1e-12);

    auto gfield = random_band_limited(g, rng);
    double lhs = 0.0, rhs = 0.0, scale = 0.0;
    auto hg = hilbert_transform(gfield);
    auto hf = hilbert_transform(f);
    for (std::size_t j = 0; j < g.n; ++j) {
      lhs += f.values()[j] * hg.values()[j];
      rhs += gfield.values()[j] * hf.values()[j];
      scale += std::abs(f.values()[j] * hg.values()[j]);
    }
    CHECK(std::abs(lhs + rhs) <= 1e-12 * std::max(scale, 1.0));
  }
}

TEST_CASE("spectral derivative identities") {
  auto g = PeriodicGrid1D::make(128, 2.0 * kPi);
  auto s1 = SpectralField1D::from_function(g, [](double x) { return std::sin(x); });
  auto d1 = spectral_derivative(s1);
  auto e1 = SpectralField1D::from_function(g, [](double x) { return std::cos(x); });
  CHECK(max_abs_diff(d1, e1) < 1e-13);

  auto s3 = SpectralField1D::from_function(g, [](double x) { return std::sin(3.0 * x); });
  auto d3 = spectral_derivative(s3);
  auto e3 = SpectralField1D::from_function(g, [](double x) { return 3.0 * std::cos(3.0 * x); });
  CHECK(max_abs_diff(d3, e3) < 1e-12);

  auto c0 = SpectralField1D::from_function(g, [](double) { return 5.0; });
  CHECK(spectral_derivative(c0).max_abs() < 1e-14);
}

TEST_CASE("periodic Biot-Savart oracle values") {
  const double L = 2.0 * kPi;
  auto g = PeriodicGrid1D::make(256, L);
  const double mu = g.mu();

  // omega = sin(2 mu x) -> u = -(L / 2 pi) sin(2 mu x)
  auto w = SpectralField1D::from_function(
      g, [mu](double x) { return std::sin(2.0 * mu * x); });
  auto u = periodic_biot_savart(w);
  auto expect = SpectralField1D::from_function(g, [&](double x) {
    return -(L / (2.0 * kPi)) * std::sin(2.0 * mu * x);
  });
  CHECK(max_abs_diff(u, expect) < 1e-13);

  CHECK(periodic_biot_savart(SpectralField1D::zero(g)).max_abs() == 0.0);

  const double c = 1.7;
  auto wc = SpectralField1D::from_function(g, [c](double) { return c; });
  auto uc = periodic_biot_savart(wc);
  const double expect_const = -c * L * std::log(2.0) / kPi;
  for (double v : uc.values())
    CHECK(v == doctest::Approx(expect_const).epsilon(1e-13));
}

TEST_CASE("u_x of Biot-Savart velocity equals H omega") {
  auto g = PeriodicGrid1D::make(512, 3.0);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    auto w = random_band_limited(g, rng);
    auto ux = spectral_derivative(periodic_biot_savart(w));
    auto hw = hilbert_transform(w);
    CHECK(max_abs_diff(ux, hw) < 1e-10);
  }
}

TEST_CASE("dealias keeps low modes and kills high ones") {
  auto g = PeriodicGrid1D::make(64, 2.0 * kPi);
  auto low = SpectralField1D::from_function(
      g, [](double x) { return std::sin(x) + 0.5 * std::cos(7.0 * x); });
  CHECK(max_abs_diff(dealias(low), low) < 1e-14);

  auto nyq = SpectralField1D::from_function(
      g, [](double x) { return std::cos(32.0 * x); });
  CHECK(dealias(nyq).max_abs() < 1e-13);

  // mode 26 > 64/3 is removed, mode 1 survives
  auto mix = SpectralField1D::from_function(
      g, [](double x) { return std::sin(x) + std::sin(26.0 * x); });
  auto kept = SpectralField1D::from_function(g, [](double x) { return std::sin(x); });
  CHECK(max_abs_diff(dealias(mix), kept) < 1e-12);
}

TEST_CASE("transform round trip") {
  for (std::size_t n : {64u, 256u, 1024u, 4096u}) {
    auto g = PeriodicGrid1D::make(n, 1.0);
    std::mt19937_64 rng(n);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    auto f = SpectralField1D::from_values(g, v);
    auto back = SpectralField1D::from_coeffs(g, f.coeffs());
    CHECK(f.rel_l2_distance(back) < 1e-13);
  }
}
