#include "smallscale/models1d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace smallscale {

namespace {
constexpr double kPi = std::numbers::pi;
}

// ---- right-hand sides ------------------------------------------------------

SpectralField1D clm_rhs(const SpectralField1D& omega) {
  omega.require_finite("clm_rhs");
  return multiply_dealiased(omega, hilbert_transform(omega));
}

SpectralField1D degregorio_rhs(const SpectralField1D& omega) {
  omega.require_finite("degregorio_rhs");
  auto u = periodic_biot_savart(omega);
  const double u_mean = u.mean();  // zero-mean convention for u_x = H omega
  std::vector<double> uz(u.values());
  for (double& v : uz) v -= u_mean;
  auto u0 = SpectralField1D::from_values(omega.grid(), std::move(uz));
  auto adv = multiply_dealiased(u0, spectral_derivative(omega));
  auto stretch = multiply_dealiased(omega, hilbert_transform(omega));
  std::vector<double> out(omega.grid().n);
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = -adv.values()[j] + stretch.values()[j];
  return SpectralField1D::from_values(omega.grid(), std::move(out));
}

std::pair<SpectralField1D, SpectralField1D> hl_rhs(
    const SpectralField1D& omega, const SpectralField1D& theta) {
  if (!(omega.grid() == theta.grid()))
    throw std::invalid_argument("hl_rhs: omega/theta grid mismatch");
  omega.require_finite("hl_rhs");
  theta.require_finite("hl_rhs");
  auto u = periodic_biot_savart(omega);
  auto adv_w = multiply_dealiased(u, spectral_derivative(omega));
  auto adv_t = multiply_dealiased(u, spectral_derivative(theta));
  auto theta_x = spectral_derivative(theta);
  std::vector<double> rw(omega.grid().n), rt(omega.grid().n);
  for (std::size_t j = 0; j < rw.size(); ++j) {
    rw[j] = -adv_w.values()[j] + theta_x.values()[j];
    rt[j] = -adv_t.values()[j];
  }
  return {SpectralField1D::from_values(omega.grid(), std::move(rw)),
          SpectralField1D::from_values(omega.grid(), std::move(rt))};
}

// ---- CLM closed form -------------------------------------------------------

SpectralField1D clm_exact(const SpectralField1D& omega0, double t) {
  omega0.require_finite("clm_exact");
  auto h = hilbert_transform(omega0);
  const std::size_t n = omega0.grid().n;
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double a = 2.0 - t * h.values()[j];
    const double b = t * omega0.values()[j];
    const double denom = a * a + b * b;
    if (denom < 1e-12)
      throw std::invalid_argument("clm_exact: t at or past blow-up time");
    out[j] = 4.0 * omega0.values()[j] / denom;
  }
  return SpectralField1D::from_values(omega0.grid(), std::move(out));
}

double clm_blowup_time(const SpectralField1D& omega0) {
  auto h = hilbert_transform(omega0);
  const double scale = std::max(omega0.max_abs(), 1e-300);
  double T = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < omega0.grid().n; ++j) {
    if (std::abs(omega0.values()[j]) < 1e-10 * scale && h.values()[j] > 0.0)
      T = std::min(T, 2.0 / h.values()[j]);
  }
  return T;
}

// ---- HL kernel -------------------------------------------------------------

double hl_kernel_K(double x, double y, const PeriodicGrid1D& grid) {
  const double mu = grid.mu();
  const double half = 0.5 * grid.length;
  if (!(x > 0.0 && x < half) || !(y > 0.0 && y < half))
    throw std::invalid_argument("hl_kernel_K: x, y must lie in (0, L/2)");
  if (x == y) throw std::invalid_argument("hl_kernel_K: singular at x = y");
  const double s = std::tan(mu * y) / std::tan(mu * x);
  if (s == 1.0) throw std::invalid_argument("hl_kernel_K: singular at s = 1");
  if (s > 1.0) return s * std::log1p(2.0 / (s - 1.0));
  return s * std::log((1.0 + s) / (1.0 - s));
}

KernelCheckReport hl_kernel_property_check(
    const PeriodicGrid1D& grid, std::size_t samples, std::uint64_t seed,
    const std::function<double(double, double)>& kernel) {
  if (samples < 100)
    throw std::invalid_argument("hl_kernel_property_check: samples >= 100");
  auto K = kernel ? kernel : std::function<double(double, double)>(
                                 [&grid](double x, double y) {
                                   return hl_kernel_K(x, y, grid);
                                 });
  const double half = 0.5 * grid.length;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(1e-6 * half, (1.0 - 1e-6) * half);

  KernelCheckReport rep;
  rep.samples = samples;
  rep.min_k_anywhere = std::numeric_limits<double>::infinity();
  rep.min_k_upper = std::numeric_limits<double>::infinity();
  rep.min_kx_upper = std::numeric_limits<double>::infinity();
  rep.pass = true;

  for (std::size_t i = 0; i < samples; ++i) {
    double x = dist(rng), y = dist(rng);
    if (std::abs(x - y) < 1e-12 * half) continue;
    const double k = K(x, y);
    if (k < rep.min_k_anywhere) rep.min_k_anywhere = k;
    if (k < -1e-12 && rep.pass) {
      rep.pass = false;
      rep.worst_x = x;
      rep.worst_y = y;
      rep.failure = "K < 0";
    }
    if (x < y) {
      if (k < rep.min_k_upper) rep.min_k_upper = k;
      if (k < 2.0 - 1e-9 && rep.pass) {
        rep.pass = false;
        rep.worst_x = x;
        rep.worst_y = y;
        rep.failure = "K < 2 on x < y";
      }
      // centered difference in x, step kept inside (0, y)
      const double hstep =
          1e-5 * std::min({x, 0.5 * (y - x), half - x});
      if (hstep > 0.0) {
        const double kx = (K(x + hstep, y) - K(x - hstep, y)) / (2.0 * hstep);
        if (kx < rep.min_kx_upper) rep.min_kx_upper = kx;
        if (kx < -1e-8 && rep.pass) {
          rep.pass = false;
          rep.worst_x = x;
          rep.worst_y = y;
          rep.failure = "K_x < 0 on x < y";
        }
      }
    }
  }
  return rep;
}

// ---- interpolation and quadrature helpers ----------------------------------

double sample_periodic(const SpectralField1D& f, double x) {
  const auto& g = f.grid();
  const double dx = g.dx();
  double s = x / dx;
  double base = std::floor(s);
  const double t = s - base;
  const auto idx = [&](long off) {
    long j = static_cast<long>(base) + off;
    long n = static_cast<long>(g.n);
    j %= n;
    if (j < 0) j += n;
    return static_cast<std::size_t>(j);
  };
  const double fm1 = f.values()[idx(-1)];
  const double f0 = f.values()[idx(0)];
  const double f1 = f.values()[idx(1)];
  const double f2 = f.values()[idx(2)];
  const double wm1 = -t * (t - 1.0) * (t - 2.0) / 6.0;
  const double w0 = (t * t - 1.0) * (t - 2.0) / 2.0;
  const double w1 = -t * (t + 1.0) * (t - 2.0) / 2.0;
  const double w2 = t * (t * t - 1.0) / 6.0;
  return wm1 * fm1 + w0 * f0 + w1 * f1 + w2 * f2;
}

namespace {

// Trapezoid of grid samples g_j over [a, L/2] with a partial first cell and a
// Richardson error estimate from the half-resolution rule.
QuadratureValue trapezoid_to_half(const std::vector<double>& g,
                                  const PeriodicGrid1D& grid, double a) {
  const double half = 0.5 * grid.length;
  const double dx = grid.dx();
  const std::size_t j_half = grid.n / 2;
  QuadratureValue q;
  if (a >= half) return q;
  if (a < 0.0) a = 0.0;
  std::size_t ja = static_cast<std::size_t>(std::ceil(a / dx - 1e-12));
  if (ja > j_half) ja = j_half;

  auto trapezoid = [&](std::size_t start, std::size_t stride) {
    double s = 0.0;
    std::size_t j = start;
    while (j + stride <= j_half) {
      s += 0.5 * (g[j] + g[j + stride]) * (dx * static_cast<double>(stride));
      j += stride;
    }
    if (j < j_half) s += 0.5 * (g[j] + g[j_half]) * (dx * (j_half - j));
    return s;
  };

  const double fine = trapezoid(ja, 1);
  const double coarse = trapezoid(ja, 2);

  // partial cell [a, x_ja] with linear interpolation of the integrand
  double partial = 0.0;
  const double xa = dx * static_cast<double>(ja);
  if (ja > 0 && xa > a) {
    const double tfrac = (xa - a) / dx;  // in (0,1]
    const double ga = g[ja] * (1.0 - tfrac) + g[ja - 1] * tfrac;
    partial = 0.5 * (ga + g[ja]) * (xa - a);
  }
  q.value = fine + partial;
  q.error = std::abs(fine - coarse) / 3.0 + 1e-15 * std::abs(fine);
  return q;
}

// omega(y) cot(mu y) sampled on nodes 0..n/2 (odd omega: node 0 taken as the
// limit omega'(0)/mu).
std::vector<double> omega_cot_samples(const SpectralField1D& omega) {
  const auto& grid = omega.grid();
  const double mu = grid.mu();
  const double dx = grid.dx();
  const std::size_t n = grid.n;
  std::vector<double> g(n / 2 + 1, 0.0);
  const auto& w = omega.values();
  const double w_prime0 =
      (w[n - 2] - 8.0 * w[n - 1] + 8.0 * w[1] - w[2]) / (12.0 * dx);
  g[0] = w_prime0 / mu;
  for (std::size_t j = 1; j <= n / 2; ++j)
    g[j] = w[j] / std::tan(mu * grid.node(j));
  return g;
}

}  // namespace

QuadratureValue hl_positivity_integral(const SpectralField1D& omega, double a) {
  omega.require_finite("hl_positivity_integral");
  const auto& grid = omega.grid();
  const std::size_t n = grid.n;
  const double half = 0.5 * grid.length;
  if (a < 0.0 || a > half)
    throw std::invalid_argument("hl_positivity_integral: a outside [0, L/2]");
  const double scale = std::max(omega.max_abs(), 1e-300);
  for (std::size_t j = 0; j <= n / 2; ++j) {
    if (omega.values()[j] < -1e-9 * scale)
      throw std::invalid_argument(
          "hl_positivity_integral: omega negative on [0, L/2]");
    const double mirror = omega.values()[(n - j) % n];
    if (std::abs(mirror + omega.values()[j]) > 1e-8 * scale)
      throw std::invalid_argument(
          "hl_positivity_integral: omega is not odd about 0");
  }

  const double mu = grid.mu();
  auto u = periodic_biot_savart(omega);
  auto hw = hilbert_transform(omega);  // u_x
  // [u cot(mu x)]_x = u_x cot(mu x) - u mu / sin^2(mu x); the x = 0 sample is
  // never used because omega(0) = 0 multiplies it.
  std::vector<double> f(n / 2 + 1, 0.0);
  for (std::size_t j = 1; j <= n / 2; ++j) {
    const double x = grid.node(j);
    const double s = std::sin(mu * x);
    const double v =
        hw.values()[j] / std::tan(mu * x) - u.values()[j] * mu / (s * s);
    f[j] = omega.values()[j] * v;
  }
  return trapezoid_to_half(f, grid, a);
}

// ---- trackers ----------------------------------------------------------------

CharacteristicTracker make_hl_tracker(const SpectralField1D& theta0,
                                      std::size_t count) {
  const auto& grid = theta0.grid();
  const double half = 0.5 * grid.length;
  CharacteristicTracker tr;
  tr.amplitude = theta0.values()[grid.n / 2];  // theta0(L/2)
  for (std::size_t nlev = 0; nlev < count; ++nlev) {
    const double target =
        (0.5 + std::pow(2.0, -static_cast<double>(nlev) - 2.0)) * tr.amplitude;
    double lo = 1e-9 * half, hi = half;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (sample_periodic(theta0, mid) < target)
        lo = mid;
      else
        hi = mid;
    }
    const double x = 0.5 * (lo + hi);
    tr.levels.push_back(x);
    tr.positions.push_back(x);
    tr.psi.push_back(-std::log(x));
    tr.omega_int.push_back(0.0);
    tr.omega_err.push_back(0.0);
  }
  return tr;
}

void track_characteristics(const Model1DState& state,
                           CharacteristicTracker& tracker, double dt) {
  const auto& grid = state.omega.grid();
  const double half = 0.5 * grid.length;
  auto u = periodic_biot_savart(state.omega);
  auto g = omega_cot_samples(state.omega);
  for (std::size_t i = 0; i < tracker.positions.size(); ++i) {
    double p = tracker.positions[i];
    const double mid = p + 0.5 * dt * sample_periodic(u, p);
    p += dt * sample_periodic(u, mid);
    if (!(p > 0.0 && p < half))
      throw std::runtime_error("characteristic exited domain");
    tracker.positions[i] = p;
    tracker.psi[i] = -std::log(p);
    const auto q = trapezoid_to_half(g, grid, p);
    tracker.omega_int[i] = q.value;
    tracker.omega_err[i] = q.error;
  }
}

double measure_cot_constant(double mu, double x0) {
  const double zmax = mu * x0;
  if (!(zmax > 0.0 && zmax < 0.5 * kPi))
    throw std::invalid_argument("measure_cot_constant: mu*x0 outside (0, pi/2)");
  double c0 = std::numeric_limits<double>::infinity();
  const int samples = 20000;
  for (int i = 1; i <= samples; ++i) {
    const double z = zmax * static_cast<double>(i) / samples;
    c0 = std::min(c0, z / std::tan(z));
  }
  return c0;
}

// ---- CKY --------------------------------------------------------------------

IntervalField cky_velocity(const IntervalField& omega) {
  omega.require_finite("cky_velocity");
  const std::size_t n = omega.n;
  const double h = omega.dx();
  IntervalField g = IntervalField::make(n);
  g.values[0] = 0.0;  // only scales u(0) = 0
  for (std::size_t i = 1; i < n; ++i)
    g.values[i] = omega.values[i] / omega.node(i);
  IntervalField gp = fd4_derivative(g);

  // right-to-left cumulative trapezoid with Euler-Maclaurin end corrections
  std::vector<double> trap(n, 0.0);
  for (std::size_t i = n - 1; i-- > 0;)
    trap[i] = trap[i + 1] + 0.5 * h * (g.values[i] + g.values[i + 1]);

  IntervalField u = IntervalField::make(n);
  const double corr_right = gp.values[n - 1];
  for (std::size_t i = 1; i < n; ++i) {
    const double integral =
        trap[i] - h * h / 12.0 * (corr_right - gp.values[i]);
    u.values[i] = -omega.node(i) * integral;
  }
  u.values[0] = 0.0;
  u.values[n - 1] = 0.0;
  return u;
}

std::pair<IntervalField, IntervalField> cky_rhs(const IntervalField& omega,
                                                const IntervalField& theta) {
  if (omega.n != theta.n)
    throw std::invalid_argument("cky_rhs: omega/theta size mismatch");
  omega.require_finite("cky_rhs");
  theta.require_finite("cky_rhs");
  const std::size_t n = omega.n;
  const double scale = omega.max_abs();
  for (std::size_t i : {std::size_t{0}, std::size_t{1}, n - 2, n - 1})
    if (std::abs(omega.values[i]) > 1e-8 * scale && scale > 0.0)
      throw std::runtime_error("support hit boundary");

  auto u = cky_velocity(omega);
  auto wx = fd4_derivative(omega);
  auto tx = fd4_derivative(theta);
  IntervalField rw = IntervalField::make(n), rt = IntervalField::make(n);
  for (std::size_t i = 0; i < n; ++i) {
    rw.values[i] = -u.values[i] * wx.values[i] + tx.values[i];
    rt.values[i] = -u.values[i] * tx.values[i];
  }
  return {std::move(rw), std::move(rt)};
}

// ---- RK4 stepper --------------------------------------------------------------

namespace {

struct RawFields {
  std::vector<double> w, th;
};

RawFields state_fields(const Model1DState& s) {
  if (s.on_interval()) return {s.iomega.values, s.itheta.values};
  if (s.kind == Model1DKind::hl) return {s.omega.values(), s.theta.values()};
  return {s.omega.values(), {}};
}

void put_fields(Model1DState& s, RawFields y) {
  if (s.on_interval()) {
    s.iomega.values = std::move(y.w);
    s.itheta.values = std::move(y.th);
  } else {
    s.omega = SpectralField1D::from_values(s.omega.grid(), std::move(y.w));
    if (s.kind == Model1DKind::hl)
      s.theta = SpectralField1D::from_values(s.theta.grid(), std::move(y.th));
  }
}

RawFields eval_rhs(const Model1DState& proto, const RawFields& y) {
  switch (proto.kind) {
    case Model1DKind::clm: {
      auto f = SpectralField1D::from_values(proto.omega.grid(), y.w);
      return {clm_rhs(f).values(), {}};
    }
    case Model1DKind::degregorio: {
      auto f = SpectralField1D::from_values(proto.omega.grid(), y.w);
      return {degregorio_rhs(f).values(), {}};
    }
    case Model1DKind::hl: {
      auto fw = SpectralField1D::from_values(proto.omega.grid(), y.w);
      auto ft = SpectralField1D::from_values(proto.omega.grid(), y.th);
      auto [rw, rt] = hl_rhs(fw, ft);
      return {rw.values(), rt.values()};
    }
    case Model1DKind::cky: {
      IntervalField fw = IntervalField::make(proto.iomega.n);
      IntervalField ft = IntervalField::make(proto.iomega.n);
      fw.values = y.w;
      ft.values = y.th;
      auto [rw, rt] = cky_rhs(fw, ft);
      return {std::move(rw.values), std::move(rt.values)};
    }
  }
  return {};
}

RawFields axpy(const RawFields& y, double a, const RawFields& k) {
  RawFields r = y;
  for (std::size_t i = 0; i < r.w.size(); ++i) r.w[i] += a * k.w[i];
  for (std::size_t i = 0; i < r.th.size(); ++i) r.th[i] += a * k.th[i];
  return r;
}

double max_abs_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

bool all_finite(const RawFields& y) {
  for (double x : y.w)
    if (!std::isfinite(x)) return false;
  for (double x : y.th)
    if (!std::isfinite(x)) return false;
  return true;
}

// Stability scales: advective CFL speed and the local stretching rate.
void stability_scales(const Model1DState& s, double& u_max, double& rate) {
  switch (s.kind) {
    case Model1DKind::clm:
      u_max = 0.0;
      rate = hilbert_transform(s.omega).max_abs();
      break;
    case Model1DKind::degregorio:
    case Model1DKind::hl: {
      u_max = periodic_biot_savart(s.omega).max_abs();
      rate = hilbert_transform(s.omega).max_abs();
      break;
    }
    case Model1DKind::cky: {
      auto u = cky_velocity(s.iomega);
      u_max = u.max_abs();
      rate = fd4_derivative(u).max_abs();
      break;
    }
  }
}

}  // namespace

StepStatus step_rk4(Model1DState& state, StepController& controller) {
  StepStatus status;
  const double dx =
      state.on_interval() ? state.iomega.dx() : state.omega.grid().dx();

  double dt = controller.dt;
  if (!controller.fixed_dt) {
    double u_max = 0.0, rate = 0.0;
    try {
      stability_scales(state, u_max, rate);
    } catch (const std::runtime_error& e) {
      status.halted = true;
      status.halt_reason = e.what();
      return status;
    }
    dt = controller.dt_max;
    if (u_max > 0.0) dt = std::min(dt, controller.cfl_target * dx / u_max);
    if (rate > 0.0) dt = std::min(dt, 0.5 / rate);
    if (dt < controller.dt_min) {
      status.halted = true;
      status.halt_reason = "blow-up suspected";
      return status;
    }
  }

  RawFields y = state_fields(state);
  const double w_scale = std::max(max_abs_of(y.w), 1e-12);

  while (true) {
    RawFields k1, k2, k3, k4;
    try {
      k1 = eval_rhs(state, y);
      k2 = eval_rhs(state, axpy(y, 0.5 * dt, k1));
      k3 = eval_rhs(state, axpy(y, 0.5 * dt, k2));
      k4 = eval_rhs(state, axpy(y, dt, k3));
    } catch (const std::runtime_error& e) {
      status.halted = true;
      status.halt_reason = e.what();
      return status;
    }
    RawFields ynew = y;
    for (std::size_t i = 0; i < ynew.w.size(); ++i)
      ynew.w[i] += dt / 6.0 *
                   (k1.w[i] + 2.0 * k2.w[i] + 2.0 * k3.w[i] + k4.w[i]);
    for (std::size_t i = 0; i < ynew.th.size(); ++i)
      ynew.th[i] += dt / 6.0 *
                    (k1.th[i] + 2.0 * k2.th[i] + 2.0 * k3.th[i] + k4.th[i]);

    const bool ok = all_finite(ynew) &&
                    (controller.fixed_dt ||
                     max_abs_of(ynew.w) <= 1.5 * w_scale);
    if (ok) {
      put_fields(state, std::move(ynew));
      state.t += dt;
      controller.dt = dt;
      status.accepted = true;
      if (max_abs_of(state_fields(state).w) > controller.blowup_cap) {
        status.halted = true;
        status.halt_reason = "blow-up suspected";
      }
      return status;
    }
    dt *= 0.5;
    if (dt < controller.dt_min || controller.fixed_dt) {
      status.halted = true;
      status.halt_reason = "blow-up suspected";
      return status;
    }
  }
}

}  // namespace smallscale
