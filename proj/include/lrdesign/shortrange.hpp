#ifndef LRDESIGN_SHORTRANGE_HPP
#define LRDESIGN_SHORTRANGE_HPP

#include "lrdesign/moments.hpp"
#include "lrdesign/oneparam.hpp"

namespace lrd {

/// Short-range error structure: rho(t) = e^{-lambda |t|} mixed with white
/// noise of weight 1 - gamma.
struct ShortRangeContext {
  double lambda = 1.0;
  double gamma = 0.5;

  void validate() const;
};

/// One-parameter optimal density under the short-range criterion
///   [ I[f^2 p] + 2 gamma I[f^2 Q(1/p) p] ] / I[f^2 p]^2,
/// solved through the multiplier equations
///   p(t) = 1 / H^-(mu - tau/f^2(t)),
///   mu   = 1/(2 gamma) + 2 I[f^2 Q(1/p) p] / I[f^2 p],
/// with p integrating to 1.
FixedPointSolution solve_shortrange(const BasisSet& basis,
                                    const ShortRangeContext& ctx,
                                    const Grid& grid,
                                    const SolveOptions& opts = {});

/// Efficiency of a (typically short-range optimal) density under the
/// long-range single-parameter criterion; the reference optimum is solved
/// on the same grid.
double cross_efficiency_lr_of_sr(const DesignDensity& candidate,
                                 const BasisSet& basis,
                                 const LimitKernel& kernel);

/// Efficiency of a (typically long-range optimal) density under the
/// short-range criterion for ctx.
double cross_efficiency_sr_of_lr(const DesignDensity& candidate,
                                 const BasisSet& basis,
                                 const ShortRangeContext& ctx);

} // namespace lrd

#endif
