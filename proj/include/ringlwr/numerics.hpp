#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace ringlwr {

/// Neumaier-compensated accumulator; error stays O(eps) independent of count.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
  CompensatedSum acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

/// Composite trapezoid rule over [a,b] with n uniform intervals.
template <class F>
double trapezoid(F&& f, double a, double b, std::size_t n) {
  if (n == 0) throw std::invalid_argument("trapezoid: need at least one interval");
  const double h = (b - a) / static_cast<double>(n);
  CompensatedSum acc;
  acc.add(0.5 * f(a));
  for (std::size_t i = 1; i < n; ++i) acc.add(f(a + h * static_cast<double>(i)));
  acc.add(0.5 * f(b));
  return acc.value() * h;
}

/// Composite Simpson rule; n is rounded up to the next even interval count.
template <class F>
double simpson(F&& f, double a, double b, std::size_t n) {
  if (n < 2) n = 2;
  if (n % 2 != 0) ++n;
  const double h = (b - a) / static_cast<double>(n);
  CompensatedSum acc;
  acc.add(f(a));
  acc.add(f(b));
  for (std::size_t i = 1; i < n; ++i) {
    const double w = (i % 2 == 1) ? 4.0 : 2.0;
    acc.add(w * f(a + h * static_cast<double>(i)));
  }
  return acc.value() * h / 3.0;
}

/// Composite 8-point Gauss-Legendre rule with `panels` equal subintervals.
template <class F>
double gauss8(F&& f, double a, double b, std::size_t panels) {
  // Nodes/weights for [-1,1], symmetric.
  static constexpr double xs[4] = {0.1834346424956498, 0.5255324099163290,
                                   0.7966664774136267, 0.9602898564975363};
  static constexpr double ws[4] = {0.3626837833783620, 0.3137066458778873,
                                   0.2223810344533745, 0.1012285362903763};
  if (panels == 0) panels = 1;
  const double h = (b - a) / static_cast<double>(panels);
  CompensatedSum acc;
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = a + h * (static_cast<double>(p) + 0.5);
    const double half = 0.5 * h;
    for (int i = 0; i < 4; ++i) {
      acc.add(ws[i] * f(mid - half * xs[i]));
      acc.add(ws[i] * f(mid + half * xs[i]));
    }
  }
  return acc.value() * 0.5 * h;
}

struct LinearRegression {
  double slope;
  double intercept;
  double r_squared;
};

/// Ordinary least squares of y against x; r² clamped to [0,1].
LinearRegression linear_fit(std::span<const double> x, std::span<const double> y);

}  // namespace ringlwr
