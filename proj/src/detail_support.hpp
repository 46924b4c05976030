#ifndef LRDESIGN_DETAIL_SUPPORT_HPP
#define LRDESIGN_DETAIL_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace lrd::detail {

// Breakpoints {-T, sign-change points of g, T}, found by a fine scan with
// bisection refinement. g may be -inf where the density bracket diverges.
inline std::vector<double> bracket_breakpoints(
    const std::function<double(double)>& g, double half_width,
    int scan = 4096) {
  const double T = half_width;
  auto sgn = [&](double x) { return g(x) > 0.0; };
  std::vector<double> bp{-T};
  bool prev = sgn(-T);
  double tprev = -T;
  for (int i = 1; i <= scan; ++i) {
    const double t = -T + 2.0 * T * i / scan;
    const bool cur = sgn(t);
    if (cur != prev) {
      double lo = tprev, hi = t;
      for (int k = 0; k < 60; ++k) {
        const double mid = 0.5 * (lo + hi);
        (sgn(mid) == prev ? lo : hi) = mid;
      }
      bp.push_back(0.5 * (lo + hi));
    }
    prev = cur;
    tprev = t;
  }
  bp.push_back(T);
  std::sort(bp.begin(), bp.end());
  return bp;
}

// Smallest |t| over the interior breakpoints; 0 when there are none.
inline double hole_radius(const std::vector<double>& breakpoints) {
  double r = 0.0;
  bool found = false;
  for (std::size_t i = 1; i + 1 < breakpoints.size(); ++i) {
    const double a = std::fabs(breakpoints[i]);
    if (!found || a < r) r = a;
    found = true;
  }
  return found ? r : 0.0;
}

} // namespace lrd::detail

#endif
