#ifndef LRDESIGN_KERNELS_HPP
#define LRDESIGN_KERNELS_HPP

#include "lrdesign/correlation.hpp"

namespace lrd {

/// Limit of the normalized correlation partial sums,
///   Q_alpha(t) = c / ((1 - alpha) |t|^alpha)  for alpha < 1,
///   Q_1(t)     = c / |t|,
/// with the family constant c (Gamma(beta)/Gamma(beta - nu) for the
/// Mittag-Leffler family, 1 otherwise).
struct LimitKernel {
  double alpha = 0.5;
  double c = 1.0;

  double q(double t) const;        // Q_alpha, t != 0
  double q_prime(double t) const;  // dQ_alpha/dt, t > 0
  double h(double t) const;        // H_alpha(t) = Q_alpha(t) - t Q'_alpha(t)
  double h_inv(double y) const;    // inverse of h on (0, inf)

  void validate() const;
};

/// Kernel constant for a long-range correlation model.
LimitKernel limit_kernel(const CorrelationModel& model);

/// Normalized correlation partial sum
///   Q_{alpha,N}(t) = (1/d_alpha(N)) sum_{j=1}^{N} rho(j t),
/// which converges to Q_alpha(t) for long-range models.
double q_partial_sum(const CorrelationModel& model, double t, std::int64_t n);

/// Short-range analogue for rho(t) = e^{-lambda t}:
///   Q(t) = sum_{j>=1} e^{-lambda j t} = 1/(e^{lambda t} - 1).
struct ShortRangeKernel {
  double lambda = 1.0;

  double q(double t) const;        // t > 0, overflow-safe for large lambda*t
  double q_prime(double t) const;
  double h(double t) const;        // strictly decreasing on (0, inf)
  double h_inv(double y) const;    // bracketing bisection, 1e-12 relative

  void validate() const;
};

} // namespace lrd

#endif
