#include "lrdesign/density.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lrd {
namespace {

std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

} // namespace

DesignDensity::DesignDensity(Grid g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (static_cast<int>(values.size()) != grid.size())
    throw std::invalid_argument("DesignDensity: value count != grid size");
}

void DesignDensity::normalize() {
  const double mass = total();
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw std::runtime_error("DesignDensity::normalize: nonpositive mass");
  for (double& v : values) v /= mass;
}

void DesignDensity::validate() const {
  for (double v : values)
    if (!(v >= 0.0))
      throw std::runtime_error("DesignDensity: negative value");
  if (std::fabs(total() - 1.0) > 1e-8)
    throw std::runtime_error("DesignDensity: integral differs from 1");
}

DesignDensity DesignDensity::uniform(const Grid& grid) {
  return DesignDensity(grid,
                       std::vector<double>(grid.size(),
                                           0.5 / grid.half_width()));
}

DesignDensity DesignDensity::from_function(
    const Grid& grid, const std::function<double(double)>& f,
    bool renormalize) {
  std::vector<double> v(grid.size());
  for (int i = 0; i < grid.size(); ++i) v[i] = f(grid.node(i));
  DesignDensity d(grid, std::move(v));
  if (renormalize) d.normalize();
  return d;
}

void DesignDensity::write_csv(std::ostream& os) const {
  os << "t,phi\n";
  for (int i = 0; i < grid.size(); ++i)
    os << fmt17(grid.node(i)) << ',' << fmt17(values[i]) << '\n';
}

void DesignDensity::write_csv_file(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  write_csv(os);
}

DesignDensity DesignDensity::read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("t,phi", 0) != 0)
    throw std::runtime_error("density CSV: missing t,phi header");
  std::vector<double> ts, vs;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string a, b;
    if (!std::getline(ls, a, ',') || !std::getline(ls, b))
      throw std::runtime_error("density CSV: malformed row: " + line);
    ts.push_back(std::stod(a));
    vs.push_back(std::stod(b));
  }
  const int n = static_cast<int>(ts.size());
  if (n < 3 || n % 2 == 0)
    throw std::runtime_error("density CSV: node count must be odd and >= 3");
  if (std::fabs(ts.front() + ts.back()) > 1e-12 * std::fabs(ts.back()))
    throw std::runtime_error("density CSV: nodes must be symmetric about 0");
  Grid grid(ts.back(), n);
  for (int i = 0; i < n; ++i)
    if (std::fabs(ts[i] - grid.node(i)) > 1e-9 * grid.spacing() + 1e-15)
      throw std::runtime_error("density CSV: nodes must be equally spaced");
  return DesignDensity(grid, std::move(vs));
}

DesignDensity DesignDensity::read_csv_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return read_csv(is);
}

} // namespace lrd
