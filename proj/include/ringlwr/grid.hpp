#pragma once

#include <functional>
#include <vector>

namespace ringlwr {

/// Uniform periodic grid on [0,1] with cell centers x_j = (j+1/2)·dx.
struct PeriodicGrid {
  explicit PeriodicGrid(int n);

  int n_cells;
  double dx() const { return 1.0 / static_cast<double>(n_cells); }
  double center(int j) const { return (static_cast<double>(j) + 0.5) * dx(); }
};

/// Cell-averaged density on a periodic grid.
struct DensityField {
  DensityField(PeriodicGrid g, std::vector<double> v);

  /// Samples f at cell centers.
  static DensityField sample(const PeriodicGrid& g, const std::function<double(double)>& f);

  PeriodicGrid grid;
  std::vector<double> values;

  int size() const { return grid.n_cells; }
  double mean() const;
  double min_value() const;
  double max_value() const;
};

}  // namespace ringlwr
