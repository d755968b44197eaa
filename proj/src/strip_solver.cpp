#include "smallscale/strip_solver.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "smallscale/fft.hpp"

namespace smallscale {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

StripGrid StripGrid::make(std::size_t n_x, std::size_t n_y, double height) {
  if (n_x < 8 || !is_power_of_two(n_x))
    throw std::invalid_argument("StripGrid: n_x must be a power of two >= 8");
  if (n_y < 32) throw std::invalid_argument("StripGrid: n_y must be >= 32");
  if (!(height > 0.0))
    throw std::invalid_argument("StripGrid: height must be positive");
  return StripGrid{n_x, n_y, height};
}

double StripGrid::dx() const { return kTwoPi / static_cast<double>(n_x); }
double StripGrid::x(std::size_t j) const {
  return dx() * static_cast<double>(j);
}

StripField StripField::zero(const StripGrid& g) {
  return StripField{g, std::vector<double>(g.size(), 0.0)};
}

StripField StripField::from_function(
    const StripGrid& g, const std::function<double(double, double)>& f_xy) {
  StripField f = zero(g);
  for (std::size_t i = 0; i < g.n_y; ++i)
    for (std::size_t j = 0; j < g.n_x; ++j)
      f.at(i, j) = f_xy(g.x(j), g.y(i));
  return f;
}

double StripField::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double strip_value(const StripField& f, long i, long j) {
  const long ny = static_cast<long>(f.grid.n_y);
  const long nx = static_cast<long>(f.grid.n_x);
  if (i < 0) i = 0;
  if (i >= ny) i = ny - 1;
  j %= nx;
  if (j < 0) j += nx;
  return f.values[f.grid.idx(static_cast<std::size_t>(i),
                             static_cast<std::size_t>(j))];
}

namespace {

std::vector<std::complex<double>> strip_forward(const StripField& f) {
  const auto& g = f.grid;
  const std::size_t nm = g.n_x / 2 + 1;
  std::vector<std::complex<double>> spec(nm * g.n_y);
  std::vector<std::complex<double>> row(nm);
  auto& fft = FftEngine::instance();
  for (std::size_t i = 0; i < g.n_y; ++i) {
    fft.forward({f.values.data() + i * g.n_x, g.n_x}, row);
    for (std::size_t m = 0; m < nm; ++m) spec[m * g.n_y + i] = row[m];
  }
  return spec;
}

StripField strip_inverse(const StripGrid& g,
                         const std::vector<std::complex<double>>& spec) {
  const std::size_t nm = g.n_x / 2 + 1;
  StripField f = StripField::zero(g);
  std::vector<std::complex<double>> row(nm);
  auto& fft = FftEngine::instance();
  for (std::size_t i = 0; i < g.n_y; ++i) {
    for (std::size_t m = 0; m < nm; ++m) row[m] = spec[m * g.n_y + i];
    fft.inverse(row, {f.values.data() + i * g.n_x, g.n_x});
  }
  return f;
}

void tridiag_solve(const std::vector<double>& a, const std::vector<double>& b,
                   const std::vector<double>& c,
                   std::vector<std::complex<double>>& rhs) {
  const std::size_t n = b.size();
  static thread_local std::vector<double> cp;
  cp.assign(n, 0.0);
  double beta = b[0];
  rhs[0] /= beta;
  for (std::size_t i = 1; i < n; ++i) {
    cp[i - 1] = c[i - 1] / beta;
    beta = b[i] - a[i] * cp[i - 1];
    rhs[i] = (rhs[i] - a[i] * rhs[i - 1]) / beta;
  }
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= cp[i] * rhs[i + 1];
}

}  // namespace

StripField poisson_strip(const StripField& omega) {
  const auto& g = omega.grid;
  const std::size_t nm = g.n_x / 2 + 1;
  const double dy = g.dy();
  auto spec = strip_forward(omega);
  std::vector<std::complex<double>> sol(spec.size());
  std::vector<std::complex<double>> rhs(g.n_y);
  double res2 = 0.0, rhs2 = 0.0;
  for (std::size_t m = 0; m < nm; ++m) {
    const double dm = static_cast<double>(m);
    std::vector<double> a(g.n_y, -1.0 / (dy * dy));
    std::vector<double> c(g.n_y, -1.0 / (dy * dy));
    std::vector<double> b(g.n_y, 2.0 / (dy * dy) + dm * dm);
    // Dirichlet ghosts (quadratic through zero) at both walls
    b[0] += -2.0 * a[0];
    c[0] += a[0] / 3.0;
    a[0] = 0.0;
    b[g.n_y - 1] += -2.0 * c[g.n_y - 1];
    a[g.n_y - 1] += c[g.n_y - 1] / 3.0;
    c[g.n_y - 1] = 0.0;

    for (std::size_t i = 0; i < g.n_y; ++i) rhs[i] = spec[m * g.n_y + i];
    for (const auto& v : rhs) rhs2 += std::norm(v);
    std::vector<std::complex<double>> saved = rhs;
    tridiag_solve(a, b, c, rhs);
    for (std::size_t i = 0; i < g.n_y; ++i) {
      sol[m * g.n_y + i] = rhs[i];
      std::complex<double> r = b[i] * rhs[i] - saved[i];
      if (i > 0) r += a[i] * rhs[i - 1];
      if (i + 1 < g.n_y) r += c[i] * rhs[i + 1];
      res2 += std::norm(r);
    }
  }
  if (std::sqrt(res2) > 1e-8 * std::sqrt(rhs2) + 1e-12)
    throw std::runtime_error("poisson_strip: solver residual too large");
  return strip_inverse(g, sol);
}

StripField strip_derivative_x(const StripField& f) {
  const auto& g = f.grid;
  const std::size_t nm = g.n_x / 2 + 1;
  auto spec = strip_forward(f);
  for (std::size_t m = 0; m < nm; ++m) {
    const std::complex<double> im(0.0, static_cast<double>(m));
    for (std::size_t i = 0; i < g.n_y; ++i) spec[m * g.n_y + i] *= im;
  }
  for (std::size_t i = 0; i < g.n_y; ++i) spec[(nm - 1) * g.n_y + i] = 0.0;
  return strip_inverse(g, spec);
}

void strip_velocity(const StripField& psi, StripField& u1, StripField& u2) {
  const auto& g = psi.grid;
  StripField psi_x = strip_derivative_x(psi);
  u1 = StripField::zero(g);
  u2 = StripField::zero(g);
  const double dy = g.dy();
  for (std::size_t i = 0; i < g.n_y; ++i) {
    for (std::size_t j = 0; j < g.n_x; ++j) {
      double up, dn;
      if (i + 1 < g.n_y)
        up = psi.at(i + 1, j);
      else
        up = (psi.at(i - 1, j) - 6.0 * psi.at(i, j)) / 3.0;
      if (i > 0)
        dn = psi.at(i - 1, j);
      else
        dn = (psi.at(1, j) - 6.0 * psi.at(0, j)) / 3.0;
      u1.at(i, j) = (up - dn) / (2.0 * dy);
      u2.at(i, j) = -psi_x.at(i, j);
    }
  }
}

namespace {

void sample_strip_velocity(const StripField& u1, const StripField& u2,
                           double x, double y, double& vx, double& vy) {
  const auto& g = u1.grid;
  const double si = y / g.dy() - 0.5;
  const double sj = x / g.dx();
  const long i0 = static_cast<long>(std::floor(si));
  const long j0 = static_cast<long>(std::floor(sj));
  const double ti = si - static_cast<double>(i0);
  const double tj = sj - static_cast<double>(j0);
  vx = vy = 0.0;
  for (int di = 0; di <= 1; ++di) {
    const double wi = di == 0 ? 1.0 - ti : ti;
    for (int dj = 0; dj <= 1; ++dj) {
      const double wj = dj == 0 ? 1.0 - tj : tj;
      vx += wi * wj * strip_value(u1, i0 + di, j0 + dj);
      vy += wi * wj * strip_value(u2, i0 + di, j0 + dj);
    }
  }
}

double sample_strip_scalar(const StripField& f, double x, double y) {
  const auto& g = f.grid;
  const double si = y / g.dy() - 0.5;
  const double sj = x / g.dx();
  const long i0 = static_cast<long>(std::floor(si));
  const long j0 = static_cast<long>(std::floor(sj));
  const double ti = si - static_cast<double>(i0);
  const double tj = sj - static_cast<double>(j0);
  auto cubic_w = [](double t, double w[4]) {
    w[0] = -t * (t - 1.0) * (t - 2.0) / 6.0;
    w[1] = (t * t - 1.0) * (t - 2.0) / 2.0;
    w[2] = -t * (t + 1.0) * (t - 2.0) / 2.0;
    w[3] = t * (t * t - 1.0) / 6.0;
  };
  double wi[4], wj[4];
  cubic_w(ti, wi);
  cubic_w(tj, wj);
  double acc = 0.0;
  for (int di = -1; di <= 2; ++di)
    for (int dj = -1; dj <= 2; ++dj)
      acc += wi[di + 1] * wj[dj + 1] * strip_value(f, i0 + di, j0 + dj);
  double lo = strip_value(f, i0, j0), hi = lo;
  for (int di = 0; di <= 1; ++di)
    for (int dj = 0; dj <= 1; ++dj) {
      const double v = strip_value(f, i0 + di, j0 + dj);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  return std::min(std::max(acc, lo), hi);
}

}  // namespace

StripField strip_advect(const StripField& f, const StripField& u1,
                        const StripField& u2, double dt) {
  const auto& g = f.grid;
  StripField out = StripField::zero(g);
  for (std::size_t i = 0; i < g.n_y; ++i) {
    const double y = g.y(i);
    for (std::size_t j = 0; j < g.n_x; ++j) {
      const double x = g.x(j);
      double vx, vy;
      sample_strip_velocity(u1, u2, x, y, vx, vy);
      const double xm = x - 0.5 * dt * vx, ym = y - 0.5 * dt * vy;
      sample_strip_velocity(u1, u2, xm, ym, vx, vy);
      double xd = x - dt * vx, yd = y - dt * vy;
      yd = std::min(std::max(yd, 0.0), g.height);  // project onto the walls
      out.at(i, j) = sample_strip_scalar(f, xd, yd);
    }
  }
  return out;
}

void refresh_derived(StripFlowState& state) {
  state.psi = poisson_strip(state.omega);
  strip_velocity(state.psi, state.u1, state.u2);
  state.have_derived = true;
}

void boussinesq_strip_step(StripFlowState& state, double dt) {
  refresh_derived(state);
  StripField theta_old = state.theta;
  StripField omega_new =
      strip_advect(state.omega, state.u1, state.u2, dt);
  StripField theta_new =
      strip_advect(state.theta, state.u1, state.u2, dt);
  // forcing d theta/dx evaluated at the half step
  StripField theta_half = theta_new;
  for (std::size_t k = 0; k < theta_half.values.size(); ++k)
    theta_half.values[k] = 0.5 * (theta_half.values[k] + theta_old.values[k]);
  StripField force = strip_derivative_x(theta_half);
  for (std::size_t k = 0; k < omega_new.values.size(); ++k)
    omega_new.values[k] += dt * force.values[k];
  state.omega = std::move(omega_new);
  state.theta = std::move(theta_new);
  state.t += dt;
}

double strip_lp_norm(const StripField& f, double p) {
  if (p == 0.0) return f.max_abs();
  const auto& g = f.grid;
  const double w = g.dx() * g.dy();
  double s = 0.0;
  for (double v : f.values) s += std::pow(std::abs(v), p) * w;
  return std::pow(s, 1.0 / p);
}

}  // namespace smallscale
