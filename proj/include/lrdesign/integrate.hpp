#ifndef LRDESIGN_INTEGRATE_HPP
#define LRDESIGN_INTEGRATE_HPP

#include <functional>
#include <vector>

namespace lrd {

/// Adaptive Simpson quadrature on [a, b] with Richardson error control.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-11, int max_depth = 40);

/// Integrates piecewise between consecutive breakpoints (which must be
/// non-decreasing); used where the integrand has kinks at known points.
double integrate_pieces(const std::function<double(double)>& f,
                        const std::vector<double>& breakpoints,
                        double tol = 1e-11);

} // namespace lrd

#endif
