#include "lrdesign/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace lrd {

void LimitKernel::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::domain_error("LimitKernel: alpha must be in (0, 1]");
  if (!(c > 0.0)) throw std::domain_error("LimitKernel: c must be > 0");
}

double LimitKernel::q(double t) const {
  if (t == 0.0) throw std::domain_error("LimitKernel::q diverges at t = 0");
  const double u = std::fabs(t);
  if (alpha < 1.0) return c / ((1.0 - alpha) * std::pow(u, alpha));
  return c / u;
}

double LimitKernel::q_prime(double t) const {
  if (!(t > 0.0)) throw std::domain_error("LimitKernel::q_prime: t must be > 0");
  if (alpha < 1.0)
    return -c * alpha / (1.0 - alpha) * std::pow(t, -alpha - 1.0);
  return -c / (t * t);
}

double LimitKernel::h(double t) const {
  if (!(t > 0.0)) throw std::domain_error("LimitKernel::h: t must be > 0");
  if (alpha < 1.0)
    return c * (1.0 + alpha) / (1.0 - alpha) * std::pow(t, -alpha);
  return 2.0 * c / t;
}

double LimitKernel::h_inv(double y) const {
  if (!(y > 0.0)) throw std::domain_error("LimitKernel::h_inv: y must be > 0");
  if (alpha < 1.0)
    return std::pow(c * (1.0 + alpha) / (y * (1.0 - alpha)), 1.0 / alpha);
  return 2.0 * c / y;
}

LimitKernel limit_kernel(const CorrelationModel& model) {
  model.validate();
  if (!model.long_range())
    throw std::domain_error("limit_kernel: model is short-range");
  LimitKernel k;
  k.alpha = model.alpha;
  k.c = model.family == Family::MittagLeffler
            ? std::tgamma(model.beta) / std::tgamma(model.beta - model.nu)
            : 1.0;
  k.validate();
  return k;
}

double q_partial_sum(const CorrelationModel& model, double t, std::int64_t n) {
  if (t == 0.0)
    throw std::domain_error("q_partial_sum: t must be nonzero");
  if (n < 1) throw std::domain_error("q_partial_sum: n must be >= 1");
  double s = 0.0;
  for (std::int64_t j = n; j >= 1; --j) s += rho_eval(model, j * t);
  return s / d_norm(model, n);
}

void ShortRangeKernel::validate() const {
  if (!(lambda > 0.0))
    throw std::domain_error("ShortRangeKernel: lambda must be > 0");
}

double ShortRangeKernel::q(double t) const {
  if (!(t > 0.0)) throw std::domain_error("ShortRangeKernel::q: t must be > 0");
  const double x = lambda * t;
  // 1/(e^x - 1) = e^{-x}/(1 - e^{-x}), stable for any x > 0
  const double em = std::exp(-x);
  return em / (1.0 - em);
}

double ShortRangeKernel::q_prime(double t) const {
  if (!(t > 0.0))
    throw std::domain_error("ShortRangeKernel::q_prime: t must be > 0");
  const double x = lambda * t;
  const double em = std::exp(-x);
  const double d = 1.0 - em;
  return -lambda * em / (d * d);
}

double ShortRangeKernel::h(double t) const {
  if (!(t > 0.0)) throw std::domain_error("ShortRangeKernel::h: t must be > 0");
  const double x = lambda * t;
  const double em = std::exp(-x);
  const double d = 1.0 - em;
  return em / d + x * em / (d * d);
}

double ShortRangeKernel::h_inv(double y) const {
  if (!(y > 0.0))
    throw std::domain_error("ShortRangeKernel::h_inv: y must be > 0");
  double lo = 1.0 / lambda, hi = 1.0 / lambda;
  while (h(hi) > y) hi *= 2.0;
  while (h(lo) < y) lo *= 0.5;
  for (int i = 0; i < 200 && (hi - lo) > 1e-14 * lo; ++i) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) > y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace lrd
