#include "ringlwr/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "ringlwr/numerics.hpp"

namespace ringlwr {

PeriodicGrid::PeriodicGrid(int n) : n_cells(n) {
  if (n < 8) throw std::invalid_argument("PeriodicGrid: need at least 8 cells");
}

DensityField::DensityField(PeriodicGrid g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (static_cast<int>(values.size()) != grid.n_cells) {
    throw std::invalid_argument("DensityField: value count does not match the grid");
  }
}

DensityField DensityField::sample(const PeriodicGrid& g,
                                  const std::function<double(double)>& f) {
  std::vector<double> v(static_cast<std::size_t>(g.n_cells));
  for (int j = 0; j < g.n_cells; ++j) v[static_cast<std::size_t>(j)] = f(g.center(j));
  return DensityField(g, std::move(v));
}

double DensityField::mean() const { return compensated_sum(values) * grid.dx(); }

double DensityField::min_value() const {
  return *std::min_element(values.begin(), values.end());
}

double DensityField::max_value() const {
  return *std::max_element(values.begin(), values.end());
}

}  // namespace ringlwr
