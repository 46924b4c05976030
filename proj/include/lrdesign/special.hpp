#ifndef LRDESIGN_SPECIAL_HPP
#define LRDESIGN_SPECIAL_HPP

namespace lrd {

/// Mittag-Leffler type function E_{nu,beta}(-t) for t >= 0, normalized so
/// that the value at t = 0 equals 1:
///
///   E_{nu,beta}(-t) = Gamma(beta) * sum_{k>=0} (-t)^k / Gamma(nu k + beta)
///
/// Requires 0 < nu <= 1, beta >= nu. The power series is used while it is
/// numerically safe (compensated summation in extended precision) and the
/// large-argument expansion
///
///   Gamma(beta) * sum_{k>=1} (-1)^{k-1} t^{-k} / Gamma(beta - nu k)
///
/// otherwise; whichever carries the smaller error estimate wins. Throws
/// std::domain_error for invalid orders and std::runtime_error if neither
/// representation reaches an acceptable accuracy.
double mittag_leffler(double nu, double beta, double t);

} // namespace lrd

#endif
