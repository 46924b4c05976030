#ifndef LRDESIGN_DENSITY_HPP
#define LRDESIGN_DENSITY_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "lrdesign/grid.hpp"

namespace lrd {

/// Nonnegative design density on [-T, T], represented by its values at the
/// grid nodes and normalized to unit Simpson integral.
struct DesignDensity {
  Grid grid;
  std::vector<double> values;

  DesignDensity(Grid g, std::vector<double> v);

  double total() const { return grid.quadrature(values); }

  /// Rescales to unit integral; throws if the mass is not positive.
  void normalize();

  /// Checks nonnegativity and |integral - 1| <= 1e-8.
  void validate() const;

  static DesignDensity uniform(const Grid& grid);
  static DesignDensity from_function(const Grid& grid,
                                     const std::function<double(double)>& f,
                                     bool renormalize = true);

  /// CSV with header "t,phi", 17 significant digits, nodes increasing.
  void write_csv(std::ostream& os) const;
  void write_csv_file(const std::string& path) const;
  static DesignDensity read_csv(std::istream& is);
  static DesignDensity read_csv_file(const std::string& path);
};

} // namespace lrd

#endif
