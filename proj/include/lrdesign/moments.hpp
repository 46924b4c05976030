#ifndef LRDESIGN_MOMENTS_HPP
#define LRDESIGN_MOMENTS_HPP

#include <Eigen/Dense>

#include "lrdesign/basis.hpp"
#include "lrdesign/density.hpp"
#include "lrdesign/kernels.hpp"

namespace lrd {

using Matrix = Eigen::MatrixXd;

enum class Criterion { D, Single, Slope };

/// Dependence regime a criterion is evaluated under: either a long-range
/// limit kernel, or the short-range pair (lambda, gamma).
struct ModelContext {
  enum class Kind { LongRange, ShortRange };
  Kind kind = Kind::LongRange;
  LimitKernel kernel;   // LongRange
  double lambda = 1.0;  // ShortRange
  double gamma = 1.0;   // ShortRange

  static ModelContext long_range(const LimitKernel& k);
  static ModelContext short_range(double lambda, double gamma);
};

/// W(phi) = (integral f_i f_j phi), symmetric; throws if numerically
/// rank-deficient (condition number above 1e12).
Matrix w_matrix(const BasisSet& basis, const DesignDensity& phi);

/// R_alpha(phi) = c/(1-alpha) * (integral f_i f_j phi^{1+alpha}) for
/// alpha < 1 and c * (integral f_i f_j phi^2) for alpha = 1.
Matrix r_matrix_longrange(const BasisSet& basis, const DesignDensity& phi,
                          const LimitKernel& kernel);

/// Short-range moment matrix
///   M = (integral f_i f_j phi) + 2 gamma (integral f_i f_j Q(1/phi) phi),
/// with the Q term continued by 0 where phi vanishes.
Matrix r_matrix_shortrange(const BasisSet& basis, const DesignDensity& phi,
                           double lambda, double gamma);

/// Psi = W^{-1} R W^{-1} via symmetric factorization solves.
Matrix psi_matrix(const Matrix& W, const Matrix& R);

/// D -> det(Psi)^{1/p}; Single -> Psi_11 (p = 1); Slope -> Psi_22 (p = 2).
double criterion_eval(Criterion crit, const Matrix& psi);

/// Builds W, R (per context) and Psi, then evaluates the criterion.
double criterion_value(Criterion crit, const BasisSet& basis,
                       const DesignDensity& phi, const ModelContext& ctx);

/// eff = criterion(reference) / criterion(candidate), in (0, 1] when the
/// reference is optimal for the context.
double efficiency(const DesignDensity& candidate,
                  const DesignDensity& reference, Criterion crit,
                  const BasisSet& basis, const ModelContext& ctx);

} // namespace lrd

#endif
