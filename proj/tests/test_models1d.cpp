#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "smallscale/models1d.hpp"

using namespace smallscale;

namespace {
constexpr double kPi = std::numbers::pi;

double max_abs_diff(const SpectralField1D& a, const SpectralField1D& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.values().size(); ++j)
    m = std::max(m, std::abs(a.values()[j] - b.values()[j]));
  return m;
}

SpectralField1D sine_field(const PeriodicGrid1D& g) {
  return SpectralField1D::from_function(g, [](double x) { return std::sin(x); });
}
}  // namespace

TEST_CASE("clm rhs oracle values") {
  auto g = PeriodicGrid1D::make(256, 2.0 * kPi);
  auto w = sine_field(g);
  auto r = clm_rhs(w);
  auto expect = SpectralField1D::from_function(
      g, [](double x) { return -std::sin(x) * std::cos(x); });
  CHECK(max_abs_diff(r, expect) < 1e-13);

  CHECK(clm_rhs(SpectralField1D::zero(g)).max_abs() == 0.0);
  auto c = SpectralField1D::from_function(g, [](double) { return 2.0; });
  CHECK(clm_rhs(c).max_abs() < 1e-13);
}

TEST_CASE("clm exact solution formula") {
  auto g = PeriodicGrid1D::make(256, 2.0 * kPi);
  auto w0 = sine_field(g);

  CHECK(max_abs_diff(clm_exact(w0, 0.0), w0) < 1e-14);

  // x = pi/2 is node 64: omega0 = 1, H omega0 = 0 -> 4/5 at t = 1
  auto w1 = clm_exact(w0, 1.0);
  CHECK(w1.values()[64] == doctest::Approx(0.8).epsilon(1e-12));

  CHECK(clm_blowup_time(w0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(clm_exact(w0, 2.0), std::invalid_argument);
}

TEST_CASE("clm exact validated against high-resolution RK4 of clm_rhs") {
  auto g = PeriodicGrid1D::make(512, 2.0 * kPi);
  Model1DState s;
  s.kind = Model1DKind::clm;
  s.omega = sine_field(g);
  StepController c;
  c.dt = 1e-4;
  c.fixed_dt = true;
  const int steps = 5000;  // to t = 0.5
  for (int i = 0; i < steps; ++i) {
    auto st = step_rk4(s, c);
    REQUIRE(st.accepted);
  }
  auto exact = clm_exact(sine_field(g), 0.5);
  CHECK(max_abs_diff(s.omega, exact) < 1e-10);
}

TEST_CASE("clm numerical solution matches oracle at t=1 with 4th order") {
  auto run_error = [](double dt) {
    auto g = PeriodicGrid1D::make(256, 2.0 * kPi);
    Model1DState s;
    s.kind = Model1DKind::clm;
    s.omega = sine_field(g);
    StepController c;
    c.dt = dt;
    c.fixed_dt = true;
    const int steps = static_cast<int>(std::llround(1.0 / dt));
    for (int i = 0; i < steps; ++i) step_rk4(s, c);
    auto exact = clm_exact(sine_field(g), 1.0);
    double m = 0.0;
    for (std::size_t j = 0; j < g.n; ++j)
      m = std::max(m, std::abs(s.omega.values()[j] - exact.values()[j]));
    return m;
  };
  const double e1 = run_error(1e-3);
  CHECK(e1 < 1e-6);
  const double e2 = run_error(4e-3);
  const double ratio = e2 / std::max(e1, 1e-300);
  // classical RK4: refining dt by 4 should shrink the error by about 4^4
  CHECK(ratio > 60.0);
  CHECK(ratio < 1100.0);
}

TEST_CASE("de gregorio steady states") {
  auto g = PeriodicGrid1D::make(256, 2.0 * kPi);
  CHECK(degregorio_rhs(sine_field(g)).max_abs() < 1e-13);
  auto c = SpectralField1D::from_function(g, [](double x) { return std::cos(x); });
  CHECK(degregorio_rhs(c).max_abs() < 1e-13);
  CHECK(degregorio_rhs(SpectralField1D::zero(g)).max_abs() == 0.0);

  Model1DState s;
  s.kind = Model1DKind::degregorio;
  s.omega = sine_field(g);
  StepController ctl;
  while (s.t < 10.0) {
    auto st = step_rk4(s, ctl);
    REQUIRE(st.accepted);
    REQUIRE(!st.halted);
  }
  CHECK(max_abs_diff(s.omega, sine_field(g)) < 1e-8);
}

TEST_CASE("hl rhs values and parity") {
  const double L = 2.0 * kPi;
  auto g = PeriodicGrid1D::make(256, L);
  const double mu = g.mu();

  auto zw = SpectralField1D::zero(g);
  auto [rw0, rt0] = hl_rhs(zw, zw);
  CHECK(rw0.max_abs() == 0.0);
  CHECK(rt0.max_abs() == 0.0);

  // omega = sin(2 mu x), theta = 0: omega-rhs = sin(2 mu x) cos(2 mu x),
  // equal to 1/2 at x = L/8.
  auto w = SpectralField1D::from_function(
      g, [mu](double x) { return std::sin(2.0 * mu * x); });
  auto [rw, rt] = hl_rhs(w, zw);
  const std::size_t j8 = g.n / 8;
  CHECK(rw.values()[j8] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rt.max_abs() < 1e-14);

  // odd omega, even theta about 0 and L/2 keeps its parity class
  auto th = SpectralField1D::from_function(
      g, [mu](double x) { return 1.0 - std::cos(2.0 * mu * x); });
  auto [rw2, rt2] = hl_rhs(w, th);
  const std::size_t n = g.n;
  double odd_dev = 0.0, even_dev = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    odd_dev = std::max(odd_dev,
                       std::abs(rw2.values()[j] + rw2.values()[n - j]));
    even_dev = std::max(even_dev,
                        std::abs(rt2.values()[j] - rt2.values()[n - j]));
  }
  CHECK(odd_dev < 1e-10);
  CHECK(even_dev < 1e-10);

  auto g2 = PeriodicGrid1D::make(128, L);
  CHECK_THROWS_AS(hl_rhs(w, SpectralField1D::zero(g2)), std::invalid_argument);
}

TEST_CASE("hl kernel values") {
  const double L = 2.0 * kPi;
  auto g = PeriodicGrid1D::make(256, L);

  // tan(mu y)/tan(mu x) = 3 at x = L/6, y = L/3
  CHECK(hl_kernel_K(L / 6.0, L / 3.0, g) ==
        doctest::Approx(3.0 * std::log(2.0)).epsilon(1e-12));
  // swap: s = 1/3 -> K = log(2)/3
  CHECK(hl_kernel_K(L / 3.0, L / 6.0, g) ==
        doctest::Approx(std::log(2.0) / 3.0).epsilon(1e-12));
  // y -> L/2 gives s -> infinity and K -> 2
  CHECK(hl_kernel_K(L / 6.0, 0.5 * L * (1.0 - 1e-9), g) ==
        doctest::Approx(2.0).epsilon(1e-6));

  CHECK_THROWS_AS(hl_kernel_K(1.0, 1.0, g), std::invalid_argument);
  CHECK_THROWS_AS(hl_kernel_K(0.0, 1.0, g), std::invalid_argument);
  CHECK_THROWS_AS(hl_kernel_K(1.0, 0.5 * L, g), std::invalid_argument);
}

TEST_CASE("hl kernel property sweep") {
  auto g = PeriodicGrid1D::make(256, 2.0 * kPi);
  auto rep = hl_kernel_property_check(g, 10000, 31337);
  CHECK(rep.pass);
  CHECK(rep.min_k_anywhere >= -1e-12);
  CHECK(rep.min_k_upper >= 2.0 - 1e-9);
  CHECK(rep.min_kx_upper >= -1e-8);

  // fault injection: a corrupted kernel must be caught with the pair
  auto bad = [&g](double x, double y) { return hl_kernel_K(x, y, g) - 1.5; };
  auto rep2 = hl_kernel_property_check(g, 1000, 31337, bad);
  CHECK(!rep2.pass);
  CHECK(rep2.failure != "");
  CHECK(rep2.worst_x > 0.0);

  CHECK_THROWS_AS(hl_kernel_property_check(g, 50, 1), std::invalid_argument);
}

TEST_CASE("hl positivity integral") {
  const double L = 2.0 * kPi;
  auto g = PeriodicGrid1D::make(1024, L);
  const double mu = g.mu();

  auto zero = SpectralField1D::zero(g);
  auto q0 = hl_positivity_integral(zero, 0.3);
  CHECK(q0.value == 0.0);

  auto w = SpectralField1D::from_function(
      g, [mu](double x) { return std::sin(2.0 * mu * x); });
  auto qh = hl_positivity_integral(w, 0.5 * L);
  CHECK(std::abs(qh.value) < 1e-14);

  auto q = hl_positivity_integral(w, 0.25 * L);
  CHECK(q.value >= -q.error);

  // precondition violations
  auto ev = SpectralField1D::from_function(
      g, [mu](double x) { return std::cos(2.0 * mu * x); });
  CHECK_THROWS_AS(hl_positivity_integral(ev, 0.1), std::invalid_argument);
  auto neg = SpectralField1D::from_function(
      g, [mu](double x) { return -std::sin(2.0 * mu * x); });
  CHECK_THROWS_AS(hl_positivity_integral(neg, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(hl_positivity_integral(w, -0.1), std::invalid_argument);
}

TEST_CASE("tracker construction and trivial dynamics") {
  const double L = 2.0 * kPi;
  auto g = PeriodicGrid1D::make(1024, L);
  const double A = 8.0;
  auto th0 = SpectralField1D::from_function(
      g, [A](double x) { return A * 0.5 * (1.0 - std::cos(x)); });
  auto tr = make_hl_tracker(th0, 9);
  CHECK(tr.amplitude == doctest::Approx(A).epsilon(1e-12));
  for (std::size_t n = 0; n < tr.levels.size(); ++n) {
    // theta0(x_n) = (1/2 + 2^{-(n+2)}) A means cos(x_n) = -2^{-(n+1)}
    const double expect = std::acos(-std::pow(2.0, -(double)n - 1.0));
    CHECK(tr.levels[n] == doctest::Approx(expect).epsilon(1e-8));
    CHECK(tr.psi[n] == doctest::Approx(-std::log(tr.levels[n])).epsilon(1e-12));
    if (n > 0) CHECK(tr.levels[n] < tr.levels[n - 1]);
  }

  Model1DState s;
  s.kind = Model1DKind::hl;
  s.omega = SpectralField1D::zero(g);
  s.theta = th0;
  auto before = tr.positions;
  track_characteristics(s, tr, 0.01);
  for (std::size_t n = 0; n < tr.positions.size(); ++n) {
    CHECK(tr.positions[n] == doctest::Approx(before[n]).epsilon(1e-14));
    CHECK(std::abs(tr.omega_int[n]) < 1e-14);
  }
}

TEST_CASE("measured cot constant") {
  // z cot z is decreasing, so the measured constant is near z0 cot z0
  const double mu = 0.5, x0 = 2.0 * kPi / 3.0;
  const double c0 = measure_cot_constant(mu, x0);
  CHECK(c0 == doctest::Approx((mu * x0) / std::tan(mu * x0)).epsilon(1e-6));
  CHECK_THROWS_AS(measure_cot_constant(1.0, 4.0), std::invalid_argument);
}

TEST_CASE("cky velocity oracle") {
  auto one = IntervalField::from_function(4096, [](double) { return 1.0; });
  auto u = cky_velocity(one);
  double worst = 0.0;
  for (std::size_t i = 0; i < one.n; ++i) {
    const double x = one.node(i);
    if (x < 0.2) continue;
    const double expect = (x == 1.0) ? 0.0 : x * std::log(x);
    worst = std::max(worst, std::abs(u.values[i] - expect));
  }
  CHECK(worst < 1e-10);
  CHECK(u.values[one.n - 1] == 0.0);

  auto zero = IntervalField::make(256);
  CHECK(cky_velocity(zero).max_abs() == 0.0);

  // supported omega: u vanishes right of the support
  auto bump = IntervalField::from_function(512, [](double x) {
    const double s = (x - 0.4) / 0.1;
    return std::abs(s) < 1.0 ? std::exp(-1.0 / (1.0 - s * s)) : 0.0;
  });
  auto ub = cky_velocity(bump);
  for (std::size_t i = 0; i < bump.n; ++i)
    if (bump.node(i) > 0.55) CHECK(std::abs(ub.values[i]) < 1e-13);
}

TEST_CASE("cky rhs") {
  const std::size_t n = 257;
  auto zero = IntervalField::make(n);
  auto [rw0, rt0] = cky_rhs(zero, zero);
  CHECK(rw0.max_abs() == 0.0);
  CHECK(rt0.max_abs() == 0.0);

  auto bump = IntervalField::from_function(n, [](double x) {
    const double s = (x - 0.5) / 0.3;
    return std::abs(s) < 1.0 ? std::exp(-1.0 / (1.0 - s * s)) : 0.0;
  });
  auto theta_c = IntervalField::from_function(n, [](double) { return 2.0; });
  auto [rw, rt] = cky_rhs(bump, theta_c);
  CHECK(rt.max_abs() < 1e-12);
  // node 128 sits exactly at the bump peak where omega_x = 0
  CHECK(std::abs(rw.values[128]) < 1e-12);

  // support reaching the end cells halts the run
  auto wide = IntervalField::from_function(n, [](double) { return 1.0; });
  CHECK_THROWS_AS(cky_rhs(wide, zero), std::runtime_error);
}

TEST_CASE("step_rk4 trivial and halting behavior") {
  auto g = PeriodicGrid1D::make(64, 2.0 * kPi);
  Model1DState s;
  s.kind = Model1DKind::clm;
  s.omega = SpectralField1D::zero(g);
  StepController c;
  c.dt = 0.01;
  c.fixed_dt = true;
  auto st = step_rk4(s, c);
  CHECK(st.accepted);
  CHECK(s.t == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(s.omega.max_abs() == 0.0);

  // a blow-up cap triggers the halt verdict
  Model1DState s2;
  s2.kind = Model1DKind::clm;
  s2.omega = sine_field(g);
  StepController c2;
  c2.blowup_cap = 0.5;
  auto st2 = step_rk4(s2, c2);
  CHECK(st2.halted);
  CHECK(st2.halt_reason == "blow-up suspected");
}

TEST_CASE("kernel representation of the weighted velocity") {
  // two independent routes to u(x) cot(mu x) for odd omega:
  // the log|sin| convolution versus the K-kernel quadrature over (0, L/2)
  const double L = 2.0 * kPi;
  auto g = PeriodicGrid1D::make(2048, L);
  const double mu = g.mu();
  auto w = SpectralField1D::from_function(g, [mu](double x) {
    const double c = std::cos(2.0 * mu * x);
    return std::sin(2.0 * mu * x) * (1.0 + 0.5 * c + 0.25 * c * c);
  });
  auto u = periodic_biot_savart(w);

  for (double x : {0.4, 1.1, 2.0, 2.9}) {
    const double lhs = sample_periodic(u, x) / std::tan(mu * x);
    // midpoint quadrature in y dodges the logarithmic singularity at y = x
    const std::size_t m = 20000;
    const double h = 0.5 * L / m;
    double rhs = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double y = (j + 0.5) * h;
      const double wy = sample_periodic(w, y) / std::tan(mu * y);
      rhs += hl_kernel_K(x, y, g) * wy * h;
    }
    rhs *= -1.0 / kPi;
    CHECK(lhs == doctest::Approx(rhs).epsilon(2e-3));
  }
}
