#include "ringlwr/numerics.hpp"

namespace ringlwr {

LinearRegression linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("linear_fit: need two or more paired samples");
  }
  const auto n = static_cast<double>(x.size());
  CompensatedSum sx, sy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx.add(x[i]);
    sy.add(y[i]);
  }
  const double mx = sx.value() / n;
  const double my = sy.value() / n;
  CompensatedSum sxx, sxy, syy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx.add(dx * dx);
    sxy.add(dx * dy);
    syy.add(dy * dy);
  }
  if (!(sxx.value() > 0.0)) {
    throw std::invalid_argument("linear_fit: degenerate abscissae");
  }
  const double slope = sxy.value() / sxx.value();
  const double intercept = my - slope * mx;
  double r2 = 1.0;
  if (syy.value() > 0.0) {
    r2 = slope * sxy.value() / syy.value();
    if (r2 < 0.0) r2 = 0.0;
    if (r2 > 1.0) r2 = 1.0;
  }
  return LinearRegression{slope, intercept, r2};
}

}  // namespace ringlwr
