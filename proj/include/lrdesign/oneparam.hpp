#ifndef LRDESIGN_ONEPARAM_HPP
#define LRDESIGN_ONEPARAM_HPP

#include "lrdesign/basis.hpp"
#include "lrdesign/density.hpp"
#include "lrdesign/kernels.hpp"

namespace lrd {

struct SolveOptions {
  double tol = 1e-8;
  int max_iter = 200;
  double picard_relaxation = 0.5;
  bool force_picard = false; // skip the quasi-Newton stage (diagnostic)
};

/// Multipliers, density and diagnostics of the one-parameter optimal-design
/// fixed point. `support_edge` is the hole radius (0 when the support is the
/// whole interval).
struct FixedPointSolution {
  double mu = 0.0;
  double tau = 0.0;
  DesignDensity density;
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  double support_edge = 0.0;
};

/// Solves the coupled (mu, tau) equations for the one-parameter model under
/// a long-range limit kernel: the density is
///   p(t) = [ (1-alpha)/(c (1+alpha)) * (mu - tau/f^2(t)) ]_+^{1/alpha}
/// (for alpha = 1: p = (mu - tau/f^2)_+ / (2c), which forces tau = 0), with
/// p integrating to 1 and mu = 2c/(1-alpha) * I[f^2 p^{1+alpha}] / I[f^2 p].
/// Damped Broyden on (mu, tau) with a damped Picard fallback.
FixedPointSolution solve_one_param(const BasisSet& basis,
                                   const LimitKernel& kernel, const Grid& grid,
                                   const SolveOptions& opts = {});

/// Pointwise density formula above for given multipliers; unnormalized.
std::vector<double> density_from_multipliers(const BasisSet& basis,
                                             const LimitKernel& kernel,
                                             double mu, double tau,
                                             const Grid& grid);

/// Max violation of the variational optimality condition over the grid:
/// |f^2 (H(1/p) - mu) + tau| where p > 0 and (mu f^2 - tau)_+ where p = 0.
double optimality_check(const DesignDensity& phi, const BasisSet& basis,
                        const LimitKernel& kernel, double mu, double tau);

} // namespace lrd

#endif
