#pragma once

#include <limits>
#include <map>
#include <string>

#include "smallscale/timeseries.hpp"

namespace smallscale {

struct FitWindow {
  double t0 = -std::numeric_limits<double>::infinity();
  double t1 = std::numeric_limits<double>::infinity();
};

enum class GrowthKind { exponential, double_exponential, power_blowup };

struct GrowthFit {
  GrowthKind kind = GrowthKind::exponential;
  bool ok = false;
  std::string reason;      // why the fit was rejected
  double rate = 0.0;       // slope of the linearized fit
  double intercept = 0.0;
  double blowup_time = 0.0;
  int exponent = 0;        // p for power fits
  double residual = 0.0;   // RMS of the linearized fit
  FitWindow window;
  std::size_t samples = 0;
};

// log(value) linear in t.
GrowthFit fit_exponential(const TimeSeries& ts, const std::string& column,
                          FitWindow window = {});

// log log(value) linear in t; requires values > 1 and monotone growth.
GrowthFit fit_double_exponential(const TimeSeries& ts,
                                 const std::string& column,
                                 FitWindow window = {});

// Fits value^{-1/p} as a linear function of t for p in {1,2} (or the hint),
// returning the root T with the smaller normalized residual.
GrowthFit estimate_blowup_time(const TimeSeries& ts, const std::string& column,
                               int exponent_hint = 0, FitWindow window = {});

// Max relative drift of each column from its first value in the window.
std::map<std::string, double> conservation_report(
    const TimeSeries& ts, const std::vector<std::string>& columns,
    FitWindow window = {});

// A window excluding the last 5% of samples (used before halt verdicts).
FitWindow window_excluding_tail(const TimeSeries& ts, double tail_fraction = 0.05);

}  // namespace smallscale
