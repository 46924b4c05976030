#include "lrdesign/grid.hpp"

#include <stdexcept>

namespace lrd {

Grid::Grid(double half_width, int n) : half_width_(half_width), n_(n) {
  if (!(half_width > 0.0))
    throw std::domain_error("Grid: half_width must be > 0");
  if (n < 3 || n % 2 == 0)
    throw std::domain_error("Grid: n must be odd and >= 3");
}

std::vector<double> Grid::nodes() const {
  std::vector<double> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = node(i);
  return out;
}

double Grid::weight(int i) const {
  const double h3 = spacing() / 3.0;
  if (i == 0 || i == n_ - 1) return h3;
  return i % 2 == 1 ? 4.0 * h3 : 2.0 * h3;
}

double Grid::quadrature(std::span<const double> values) const {
  if (static_cast<int>(values.size()) != n_)
    throw std::invalid_argument("Grid::quadrature: size mismatch");
  double sum = 0.0;
  for (int i = 0; i < n_; ++i) sum += weight(i) * values[i];
  return sum;
}

} // namespace lrd
