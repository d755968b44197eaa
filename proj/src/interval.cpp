#include "smallscale/interval.hpp"

#include <cmath>
#include <stdexcept>

namespace smallscale {

IntervalField IntervalField::make(std::size_t n) {
  if (n < 64)
    throw std::invalid_argument("IntervalField: need at least 64 nodes");
  IntervalField f;
  f.n = n;
  f.values.assign(n, 0.0);
  return f;
}

IntervalField IntervalField::from_function(
    std::size_t n, const std::function<double(double)>& fn) {
  IntervalField f = make(n);
  for (std::size_t i = 0; i < n; ++i) f.values[i] = fn(f.node(i));
  return f;
}

double IntervalField::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

void IntervalField::require_finite(const std::string& op_name) const {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!std::isfinite(values[i]))
      throw std::invalid_argument(op_name + ": non-finite value at index " +
                                  std::to_string(i));
}

IntervalField fd4_derivative(const IntervalField& f) {
  const std::size_t n = f.n;
  const double h = f.dx();
  IntervalField d = IntervalField::make(n);
  const auto& v = f.values;
  for (std::size_t i = 2; i + 2 < n; ++i)
    d.values[i] =
        (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) / (12.0 * h);
  d.values[0] = (-25.0 * v[0] + 48.0 * v[1] - 36.0 * v[2] + 16.0 * v[3] -
                 3.0 * v[4]) /
                (12.0 * h);
  d.values[1] =
      (-3.0 * v[0] - 10.0 * v[1] + 18.0 * v[2] - 6.0 * v[3] + v[4]) /
      (12.0 * h);
  d.values[n - 2] = -(-3.0 * v[n - 1] - 10.0 * v[n - 2] + 18.0 * v[n - 3] -
                      6.0 * v[n - 4] + v[n - 5]) /
                    (12.0 * h);
  d.values[n - 1] = -(-25.0 * v[n - 1] + 48.0 * v[n - 2] - 36.0 * v[n - 3] +
                      16.0 * v[n - 4] - 3.0 * v[n - 5]) /
                    (12.0 * h);
  return d;
}

}  // namespace smallscale
