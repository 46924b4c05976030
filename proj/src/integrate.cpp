#include "lrdesign/integrate.hpp"

#include <cmath>
#include <stdexcept>

namespace lrd {
namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double fa, double fm, double fb, double whole, double tol,
             int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol, int max_depth) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = simpson(fa, fm, fb, b - a);
  return adapt(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

double integrate_pieces(const std::function<double(double)>& f,
                        const std::vector<double>& breakpoints, double tol) {
  if (breakpoints.size() < 2)
    throw std::invalid_argument("integrate_pieces: need at least 2 breakpoints");
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] < breakpoints[i])
      throw std::invalid_argument("integrate_pieces: breakpoints must be "
                                  "non-decreasing");
    total += integrate(f, breakpoints[i], breakpoints[i + 1], tol);
  }
  return total;
}

} // namespace lrd
