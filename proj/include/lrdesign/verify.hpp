#ifndef LRDESIGN_VERIFY_HPP
#define LRDESIGN_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lrdesign/correlation.hpp"
#include "lrdesign/moments.hpp"

namespace lrd {

/// Finite sampling design: N non-decreasing points in [-T, T], generated
/// from a density by quantile spacing t_i = a((i-1)/(N-1)).
struct FiniteDesign {
  double half_width = 1.0;
  std::vector<double> points;

  int n() const { return static_cast<int>(points.size()); }
  void validate() const;
};

/// Inverts the cumulative Simpson integral of phi at the equispaced levels
/// (i-1)/(N-1). Flat CDF stretches (zero-density holes) map their whole
/// level range to the single crossing point.
FiniteDesign design_points_from_density(const DesignDensity& phi, int n);

/// Exact covariance of the least-squares estimate under
///   Sigma_ij = gamma rho(N (t_i - t_j)) + (1 - gamma) delta_ij:
/// (X^T X)^{-1} X^T Sigma X (X^T X)^{-1} with unit error variance,
/// optionally premultiplied by N / d_alpha(N).
Matrix exact_lse_covariance(const BasisSet& basis, const FiniteDesign& design,
                            const CorrelationModel& model, double gamma,
                            bool long_range_scaling = false,
                            int n_cap = 5000);

struct ConvergenceReport {
  std::vector<std::int64_t> n_values;
  std::vector<double> d_values;    // d_alpha(N)
  std::vector<double> rel_errors;  // Frobenius, vs the asymptotic prediction
  double fitted_slope = 0.0;       // of log error vs log(1/d_alpha(N))
  bool monotone_decreasing = false;
  bool halved = false;             // final error <= half the initial error

  void write_csv(std::ostream& os) const;
  void write_csv_file(const std::string& path) const;
};

/// Compares (N/d_alpha(N)) x exact LSE covariance against the asymptotic
/// prediction 2 gamma Psi for each N.
ConvergenceReport convergence_report(const BasisSet& basis,
                                     const DesignDensity& phi,
                                     const CorrelationModel& model,
                                     double gamma,
                                     const std::vector<std::int64_t>& n_list,
                                     int n_cap = 5000);

} // namespace lrd

#endif
