#include "lrdesign/special.hpp"

#include <quadmath.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lrd {
namespace {

constexpr int kMaxTerms = 1000000;

bool is_gamma_pole(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// 1/Gamma(x), defined as 0 at the poles.
double rgamma(double x) {
  if (is_gamma_pole(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

// nu == 1 reduces to a Kummer function; the transformed series
//   e^{-t} * sum_k t^k/k! * (beta-1)/(beta-1+k)
// has positive terms only, so there is no cancellation for any t.
double ml_nu_one(double beta, double t) {
  if (beta == 1.0) return std::exp(-t);
  long double sum = 0.0L;
  long double pw = 1.0L; // t^k / k!
  for (int k = 0; k < kMaxTerms; ++k) {
    long double term = pw * (beta - 1.0L) / (beta - 1.0L + k);
    sum += term;
    if (term < 1e-18L * sum && k > t) break;
    pw *= t / (k + 1);
  }
  return static_cast<double>(std::exp(-(long double)t) * sum);
}

struct Estimate {
  double value = std::numeric_limits<double>::quiet_NaN();
  double abs_err = std::numeric_limits<double>::infinity();
};

// Alternating series in quad precision; the result is only as accurate as
// the largest intermediate term allows (catastrophic cancellation), so the
// error estimate carries max|term| times the quad epsilon.
Estimate ml_series(double nu, double beta, double t) {
  const __float128 lgb = lgammaq(beta);
  const __float128 lt = logq(t);
  __float128 sum = 0, comp = 0, max_abs = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    // the Gamma argument must be formed in quad precision: double rounding
    // of nu*k is amplified by the huge cancelling terms near the series peak
    const __float128 lg = lgammaq(static_cast<__float128>(nu) * k + beta);
    __float128 term = expq(lgb - lg + k * lt);
    if (k % 2 == 1) term = -term;
    const __float128 y = term - comp;
    const __float128 s = sum + y;
    comp = (s - sum) - y;
    sum = s;
    const __float128 a = fabsq(term);
    if (a > max_abs) max_abs = a;
    if (a < 1e-36Q * fabsq(sum) + 1e-300Q && k > t) break;
    if (!std::isfinite(static_cast<double>(a))) return {};
  }
  Estimate e;
  e.value = static_cast<double>(sum);
  e.abs_err = static_cast<double>(max_abs) * 2e-34 + std::fabs(e.value) * 1e-16;
  return e;
}

// Divergent large-t expansion, truncated at the globally smallest nonzero
// term (the magnitudes oscillate near the Gamma poles, so stopping at the
// first increase would truncate far too early).
Estimate ml_asymptotic(double nu, double beta, double t) {
  constexpr int kMax = 60;
  const double gb = std::tgamma(beta);
  double term[kMax + 1];
  int cut = 0;
  double cut_a = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= kMax; ++k) {
    term[k] = gb * std::pow(t, -k) * rgamma(beta - nu * k);
    if (k % 2 == 0) term[k] = -term[k];
    const double a = std::fabs(term[k]);
    if (a > 0.0 && a < cut_a) {
      cut_a = a;
      cut = k;
    }
  }
  if (cut == 0) return {};
  double sum = 0.0;
  for (int k = cut; k >= 1; --k) sum += term[k];
  Estimate e;
  e.value = sum;
  e.abs_err = cut_a + std::fabs(sum) * 1e-16;
  return e;
}

} // namespace

double mittag_leffler(double nu, double beta, double t) {
  if (!(nu > 0.0 && nu <= 1.0))
    throw std::domain_error("mittag_leffler: nu must be in (0, 1]");
  if (!(beta >= nu))
    throw std::domain_error("mittag_leffler: beta must be >= nu");
  if (!(t >= 0.0))
    throw std::domain_error("mittag_leffler: t must be >= 0");
  if (t == 0.0) return 1.0;
  if (nu == 1.0) return ml_nu_one(beta, t);

  Estimate best = ml_series(nu, beta, t);
  if (t > 1.0) {
    Estimate a = ml_asymptotic(nu, beta, t);
    if (a.abs_err < best.abs_err) best = a;
  }
  if (!std::isfinite(best.value) ||
      best.abs_err > 1e-6 * std::max(std::fabs(best.value), 1e-30))
    throw std::runtime_error("mittag_leffler: no accurate regime at t = " +
                             std::to_string(t));
  return best.value;
}

} // namespace lrd
