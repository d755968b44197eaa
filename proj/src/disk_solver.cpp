#include "smallscale/disk_solver.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace smallscale {

namespace {

// Thomas solve for the radial mode systems; coefficients are real, the
// right-hand side complex.
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

struct ModeSystem {
  std::vector<double> a, b, c;
};

// -psi'' - psi'/r + (m^2/r^2) psi = w, folded ghosts at both ends.
ModeSystem build_mode_system(const PolarGrid& g, std::size_t m) {
  const std::size_t n = g.n_r;
  const double dr = g.dr();
  ModeSystem s;
  s.a.assign(n, 0.0);
  s.b.assign(n, 0.0);
  s.c.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = g.radius(i);
    s.a[i] = -1.0 / (dr * dr) + 1.0 / (2.0 * dr * r);
    s.c[i] = -1.0 / (dr * dr) - 1.0 / (2.0 * dr * r);
    const double dm = static_cast<double>(m);
    s.b[i] = 2.0 / (dr * dr) + dm * dm / (r * r);
  }
  // center: psi(-r0) = (-1)^m psi(r0)
  s.b[0] += (m % 2 == 0 ? s.a[0] : -s.a[0]);
  s.a[0] = 0.0;
  // wall: quadratic ghost through psi(1) = 0: psi_N = (psi_{N-2} - 6 psi_{N-1})/3
  s.a[n - 1] += s.c[n - 1] / 3.0;
  s.b[n - 1] += -2.0 * s.c[n - 1];
  s.c[n - 1] = 0.0;
  return s;
}

}  // namespace

DiskField poisson_disk(const DiskField& omega) {
  const auto& g = omega.grid;
  const std::size_t nm = g.n_theta / 2 + 1;
  auto spec = disk_angular_forward(omega);

  std::vector<std::complex<double>> rhs(g.n_r);
  std::vector<std::complex<double>> sol(spec.size());
  double res2 = 0.0, rhs2 = 0.0;
  for (std::size_t m = 0; m < nm; ++m) {
    auto sys = build_mode_system(g, m);
    for (std::size_t i = 0; i < g.n_r; ++i) rhs[i] = spec[m * g.n_r + i];
    for (const auto& v : rhs) rhs2 += std::norm(v);
    tridiag_solve(sys.a, sys.b, sys.c, rhs);
    for (std::size_t i = 0; i < g.n_r; ++i) sol[m * g.n_r + i] = rhs[i];
    // residual of the discrete operator against the original mode data
    auto fresh = build_mode_system(g, m);
    for (std::size_t i = 0; i < g.n_r; ++i) {
      std::complex<double> r = fresh.b[i] * rhs[i] - spec[m * g.n_r + i];
      if (i > 0) r += fresh.a[i] * rhs[i - 1];
      if (i + 1 < g.n_r) r += fresh.c[i] * rhs[i + 1];
      res2 += std::norm(r);
    }
  }
  if (std::sqrt(res2) > 1e-8 * std::sqrt(rhs2) + 1e-12)
    throw std::runtime_error("poisson_disk: solver residual too large");
  return disk_angular_inverse(g, sol);
}

void velocity_from_stream(const DiskField& psi, DiskField& u1, DiskField& u2) {
  const auto& g = psi.grid;
  // angular derivative, spectral
  auto spec = disk_angular_forward(psi);
  const std::size_t nm = g.n_theta / 2 + 1;
  for (std::size_t m = 0; m < nm; ++m) {
    const std::complex<double> im(0.0, static_cast<double>(m));
    for (std::size_t i = 0; i < g.n_r; ++i) spec[m * g.n_r + i] *= im;
  }
  if (nm >= 2) {  // zero the angular Nyquist mode of the derivative
    for (std::size_t i = 0; i < g.n_r; ++i) spec[(nm - 1) * g.n_r + i] = 0.0;
  }
  DiskField psi_th = disk_angular_inverse(g, spec);

  u1 = DiskField::zero(g);
  u2 = DiskField::zero(g);
  const double dr = g.dr();
  for (std::size_t i = 0; i < g.n_r; ++i) {
    const double r = g.radius(i);
    for (std::size_t j = 0; j < g.n_theta; ++j) {
      double psi_up, psi_dn;
      if (i + 1 < g.n_r)
        psi_up = psi.at(i + 1, j);
      else
        psi_up = (disk_value(psi, static_cast<long>(g.n_r) - 2,
                             static_cast<long>(j)) -
                  6.0 * psi.at(i, j)) /
                 3.0;  // wall ghost, quadratic through zero
      psi_dn = disk_value(psi, static_cast<long>(i) - 1, static_cast<long>(j));
      const double psi_r = (psi_up - psi_dn) / (2.0 * dr);
      const double ur = psi_th.at(i, j) / r;
      const double uth = -psi_r;
      const double th = g.angle(j);
      u1.at(i, j) = ur * std::cos(th) - uth * std::sin(th);
      u2.at(i, j) = ur * std::sin(th) + uth * std::cos(th);
    }
  }
}

void sample_velocity(const DiskField& u1, const DiskField& u2, double x,
                     double y, double& vx, double& vy) {
  const auto& g = u1.grid;
  const double r = std::hypot(x, y);
  const double th = std::atan2(y, x);
  const double si = r / g.dr() - 0.5;
  const double sj = th / g.dtheta();
  const long i0 = static_cast<long>(std::floor(si));
  const long j0 = static_cast<long>(std::floor(sj));
  const double tr = si - static_cast<double>(i0);
  const double tt = sj - static_cast<double>(j0);
  vx = vy = 0.0;
  for (int di = 0; di <= 1; ++di) {
    const double wr = di == 0 ? 1.0 - tr : tr;
    for (int dj = 0; dj <= 1; ++dj) {
      const double wt = dj == 0 ? 1.0 - tt : tt;
      vx += wr * wt * disk_value(u1, i0 + di, j0 + dj);
      vy += wr * wt * disk_value(u2, i0 + di, j0 + dj);
    }
  }
}

double sample_scalar(const DiskField& f, double r, double theta) {
  const auto& g = f.grid;
  const double si = r / g.dr() - 0.5;
  const double sj = theta / g.dtheta();
  const long i0 = static_cast<long>(std::floor(si));
  const long j0 = static_cast<long>(std::floor(sj));
  const double tr = si - static_cast<double>(i0);
  const double tt = sj - static_cast<double>(j0);

  auto cubic_w = [](double t, double w[4]) {
    w[0] = -t * (t - 1.0) * (t - 2.0) / 6.0;
    w[1] = (t * t - 1.0) * (t - 2.0) / 2.0;
    w[2] = -t * (t + 1.0) * (t - 2.0) / 2.0;
    w[3] = t * (t * t - 1.0) / 6.0;
  };
  double wr[4], wt[4];
  cubic_w(tr, wr);
  cubic_w(tt, wt);

  double acc = 0.0;
  for (int di = -1; di <= 2; ++di)
    for (int dj = -1; dj <= 2; ++dj)
      acc += wr[di + 1] * wt[dj + 1] * disk_value(f, i0 + di, j0 + dj);

  // monotone clip against the enclosing 2x2 cell
  double lo = disk_value(f, i0, j0), hi = lo;
  for (int di = 0; di <= 1; ++di)
    for (int dj = 0; dj <= 1; ++dj) {
      const double v = disk_value(f, i0 + di, j0 + dj);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  return std::min(std::max(acc, lo), hi);
}

DiskField semi_lagrangian_advect(const DiskField& f, const DiskField& u1,
                                 const DiskField& u2, double dt) {
  const auto& g = f.grid;
  DiskField out = DiskField::zero(g);
  for (std::size_t i = 0; i < g.n_r; ++i) {
    const double r = g.radius(i);
    for (std::size_t j = 0; j < g.n_theta; ++j) {
      const double th = g.angle(j);
      const double x = r * std::cos(th), y = r * std::sin(th);
      double vx, vy;
      sample_velocity(u1, u2, x, y, vx, vy);
      const double xm = x - 0.5 * dt * vx, ym = y - 0.5 * dt * vy;
      sample_velocity(u1, u2, xm, ym, vx, vy);
      double xd = x - dt * vx, yd = y - dt * vy;
      double rd = std::hypot(xd, yd);
      if (rd > 1.0) {  // project onto the wall
        xd /= rd;
        yd /= rd;
        rd = 1.0;
      }
      out.at(i, j) = sample_scalar(f, rd, std::atan2(yd, xd));
    }
  }
  return out;
}

void refresh_derived(DiskFlowState& state) {
  state.psi = poisson_disk(state.omega);
  velocity_from_stream(state.psi, state.u1, state.u2);
  state.have_derived = true;
}

void euler_disk_step(DiskFlowState& state, double dt) {
  refresh_derived(state);
  state.omega = semi_lagrangian_advect(state.omega, state.u1, state.u2, dt);
  state.t += dt;
}

double disk_kinetic_energy(const DiskFlowState& state) {
  const auto& g = state.omega.grid;
  const double w = g.dr() * g.dtheta();
  double e = 0.0;
  for (std::size_t i = 0; i < g.n_r; ++i) {
    const double r = g.radius(i);
    for (std::size_t j = 0; j < g.n_theta; ++j) {
      const double a = state.u1.at(i, j), b = state.u2.at(i, j);
      e += (a * a + b * b) * r * w;
    }
  }
  return e;
}

double wall_normal_velocity(const DiskFlowState& state) {
  // u . n at r = 1 is the tangential derivative of the scheme's own wall
  // trace: the quadratic through psi_{N-2}, psi_{N-1} and the wall ghost.
  const auto& g = state.psi.grid;
  const std::size_t n = g.n_r;
  std::vector<double> wall(g.n_theta);
  for (std::size_t j = 0; j < g.n_theta; ++j) {
    const double pm1 = state.psi.at(n - 1, j);
    const double pm2 = state.psi.at(n - 2, j);
    const double ghost = (pm2 - 6.0 * pm1) / 3.0;
    wall[j] = (-pm2 + 6.0 * pm1 + 3.0 * ghost) / 8.0;
  }
  double m = 0.0;
  const double dth = g.dtheta();
  for (std::size_t j = 0; j < g.n_theta; ++j) {
    const double prev = wall[(j + g.n_theta - 1) % g.n_theta];
    const double next = wall[(j + 1) % g.n_theta];
    m = std::max(m, std::abs((next - prev) / (2.0 * dth)));
  }
  return m;
}

}  // namespace smallscale
