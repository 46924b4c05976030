#ifndef LRDESIGN_CORRELATION_HPP
#define LRDESIGN_CORRELATION_HPP

#include <cstdint>
#include <functional>

namespace lrd {

enum class Family { Cauchy, MittagLeffler, Svf, Exponential };

/// Stationary error correlation family. The three long-range families
/// (Cauchy, Mittag-Leffler, SVF) decay like L(t)/|t|^alpha with
/// 0 < alpha <= 1; the exponential family e^{-lambda |t|} is short-range.
struct CorrelationModel {
  Family family = Family::Cauchy;
  double alpha = 0.5;   // decay exponent, in (0, 1]
  double beta = 1.0;    // Cauchy shape (> 0) or second Mittag-Leffler order (>= nu)
  double nu = 0.5;      // first Mittag-Leffler order, in (0, 1]
  double lambda = 1.0;  // exponential rate (> 0)
  std::function<double(double)> svf; // slowly varying factor L, defaults to L == 1

  static CorrelationModel cauchy(double alpha, double beta);
  static CorrelationModel mittag_leffler(double alpha, double nu, double beta);
  static CorrelationModel svf_family(double alpha,
                                     std::function<double(double)> L = {});
  static CorrelationModel exponential(double lambda);

  bool long_range() const { return family != Family::Exponential; }

  /// Throws std::domain_error if the parameters violate the family
  /// constraints.
  void validate() const;
};

/// Correlation rho(t); a function of |t| with rho(0) = 1 and |rho| <= 1.
double rho_eval(const CorrelationModel& model, double t);

/// Normalizing sequence d_alpha(N) of the long-range partial sums:
/// N^{1-alpha} (alpha < 1) or ln N (alpha = 1), times L(N) for the SVF
/// family. Throws for short-range models.
double d_norm(const CorrelationModel& model, std::int64_t n);

} // namespace lrd

#endif
