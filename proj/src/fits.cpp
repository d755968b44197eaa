#include "smallscale/fits.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace smallscale {

namespace {

struct Samples {
  std::vector<double> t, v;
};

Samples collect(const TimeSeries& ts, const std::string& column,
                const FitWindow& w) {
  const auto tcol = ts.column("t");
  const auto vcol = ts.column(column);
  Samples s;
  for (std::size_t i = 0; i < tcol.size(); ++i)
    if (tcol[i] >= w.t0 && tcol[i] <= w.t1) {
      s.t.push_back(tcol[i]);
      s.v.push_back(vcol[i]);
    }
  return s;
}

// least squares y = a + b t; returns (a, b, rms residual)
struct LineFit {
  double a = 0.0, b = 0.0, rms = 0.0;
};

LineFit fit_line(const std::vector<double>& t, const std::vector<double>& y) {
  const double n = static_cast<double>(t.size());
  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    st += t[i];
    sy += y[i];
    stt += t[i] * t[i];
    sty += t[i] * y[i];
  }
  const double denom = n * stt - st * st;
  LineFit f;
  if (denom == 0.0) return f;
  f.b = (n * sty - st * sy) / denom;
  f.a = (sy - f.b * st) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double r = y[i] - (f.a + f.b * t[i]);
    ss += r * r;
  }
  f.rms = std::sqrt(ss / n);
  return f;
}

}  // namespace

GrowthFit fit_exponential(const TimeSeries& ts, const std::string& column,
                          FitWindow window) {
  GrowthFit out;
  out.kind = GrowthKind::exponential;
  out.window = window;
  auto s = collect(ts, column, window);
  out.samples = s.t.size();
  if (s.t.size() < 10) {
    out.reason = "need at least 10 samples";
    return out;
  }
  for (double v : s.v)
    if (!(v > 0.0)) {
      out.reason = "values must be positive";
      return out;
    }
  std::vector<double> y(s.v.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::log(s.v[i]);
  auto f = fit_line(s.t, y);
  out.ok = true;
  out.rate = f.b;
  out.intercept = f.a;
  out.residual = f.rms;
  return out;
}

GrowthFit fit_double_exponential(const TimeSeries& ts,
                                 const std::string& column, FitWindow window) {
  GrowthFit out;
  out.kind = GrowthKind::double_exponential;
  out.window = window;
  auto s = collect(ts, column, window);
  out.samples = s.t.size();
  if (s.t.size() < 10) {
    out.reason = "need at least 10 samples";
    return out;
  }
  double vmin = s.v[0], vmax = s.v[0];
  for (std::size_t i = 0; i < s.v.size(); ++i) {
    if (!(s.v[i] > 1.0)) {
      out.reason = "values must exceed 1 for log log";
      return out;
    }
    if (i > 0 && s.v[i] < s.v[i - 1] * (1.0 - 1e-9)) {
      out.reason = "non-monotone values";
      return out;
    }
    vmin = std::min(vmin, s.v[i]);
    vmax = std::max(vmax, s.v[i]);
  }
  if (!(vmax > vmin * (1.0 + 1e-12))) {
    out.reason = "constant column";
    return out;
  }
  std::vector<double> y(s.v.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    y[i] = std::log(std::log(s.v[i]));
  auto f = fit_line(s.t, y);
  out.ok = true;
  out.rate = f.b;
  out.intercept = f.a;
  out.residual = f.rms;
  return out;
}

GrowthFit estimate_blowup_time(const TimeSeries& ts, const std::string& column,
                               int exponent_hint, FitWindow window) {
  GrowthFit out;
  out.kind = GrowthKind::power_blowup;
  out.window = window;
  auto s = collect(ts, column, window);
  out.samples = s.t.size();
  if (s.t.size() < 10) {
    out.reason = "need at least 10 samples";
    return out;
  }
  for (double v : s.v)
    if (!(v > 0.0)) {
      out.reason = "values must be positive";
      return out;
    }

  std::vector<int> candidates;
  if (exponent_hint > 0)
    candidates = {exponent_hint};
  else
    candidates = {1, 2};

  bool found = false;
  for (int p : candidates) {
    std::vector<double> y(s.v.size());
    for (std::size_t i = 0; i < y.size(); ++i)
      y[i] = std::pow(s.v[i], -1.0 / static_cast<double>(p));
    auto f = fit_line(s.t, y);
    if (!(f.b < 0.0)) continue;  // not growing toward a root
    const double T = -f.a / f.b;
    const double span = s.t.back() - s.t.front();
    // the root may sit marginally inside the window when the series itself
    // runs up to the singularity
    if (T < s.t.back() - 0.05 * span || T > s.t.back() + 10.0 * span) continue;
    double range = 0.0;
    for (double v : y) range = std::max(range, v);
    double rmin = y[0];
    for (double v : y) rmin = std::min(rmin, v);
    range -= rmin;
    const double normalized = range > 0.0 ? f.rms / range : f.rms;
    if (!found || normalized < out.residual) {
      found = true;
      out.ok = true;
      out.blowup_time = T;
      out.exponent = p;
      out.residual = normalized;
      out.rate = f.b;
      out.intercept = f.a;
    }
  }
  if (!found) out.reason = "no blow-up indicated";
  return out;
}

std::map<std::string, double> conservation_report(
    const TimeSeries& ts, const std::vector<std::string>& columns,
    FitWindow window) {
  std::map<std::string, double> out;
  for (const auto& name : columns) {
    auto s = collect(ts, name, window);
    if (s.v.empty()) {
      out[name] = 0.0;
      continue;
    }
    const double ref = s.v.front();
    double drift = 0.0;
    for (double v : s.v) {
      const double d = (ref != 0.0) ? std::abs(v - ref) / std::abs(ref)
                                    : std::abs(v - ref);
      drift = std::max(drift, d);
    }
    out[name] = drift;
  }
  return out;
}

FitWindow window_excluding_tail(const TimeSeries& ts, double tail_fraction) {
  FitWindow w;
  if (ts.rows.empty()) return w;
  const std::size_t n = ts.rows.size();
  const std::size_t keep =
      std::max<std::size_t>(1, n - static_cast<std::size_t>(
                                      std::ceil(tail_fraction * n)));
  w.t1 = ts.rows[keep - 1][0];
  return w;
}

}  // namespace smallscale
