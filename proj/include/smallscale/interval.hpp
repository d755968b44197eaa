#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace smallscale {

// Real field on the uniform nodes x_i = i/(n-1) of [0,1].
struct IntervalField {
  std::size_t n = 0;
  std::vector<double> values;

  static IntervalField make(std::size_t n);
  static IntervalField from_function(std::size_t n,
                                     const std::function<double(double)>& f);

  double dx() const { return 1.0 / static_cast<double>(n - 1); }
  double node(std::size_t i) const {
    return static_cast<double>(i) / static_cast<double>(n - 1);
  }
  double max_abs() const;
  void require_finite(const std::string& op_name) const;
};

// Fourth-order first derivative: centered in the interior, one-sided at the
// two nodes next to each endpoint.
IntervalField fd4_derivative(const IntervalField& f);

}  // namespace smallscale
