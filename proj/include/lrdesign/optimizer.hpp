#ifndef LRDESIGN_OPTIMIZER_HPP
#define LRDESIGN_OPTIMIZER_HPP

#include <array>
#include <vector>

#include "lrdesign/moments.hpp"

namespace lrd {

struct OptimizerOptions {
  int max_iter = 20000;
  double step0 = 0.5;          // initial multiplicative step
  double step_growth = 1.3;
  double tol_stationarity = 1e-6; // relative first-order violation
  double tol_decrease = 0.0;      // stop when relative decrease falls below
  bool symmetric = true;
  int restarts = 0;            // diagnostic reruns from perturbed starts
  unsigned seed = 0;
};

struct TraceEntry {
  int iteration;
  double criterion;
  double violation;
};

struct OptimizeResult {
  DesignDensity density;
  double criterion = 0.0;
  double stationarity = 0.0; // relative first-order violation at the end
  int iterations = 0;
  bool converged = false;
  std::vector<TraceEntry> trace;
  std::vector<double> restart_criteria; // diagnostic only
};

/// Functional derivative of the criterion at the grid nodes: perturbing the
/// density by d phi_k changes the criterion by weight_k * gradient_k * d phi_k.
std::vector<double> criterion_gradient(const BasisSet& basis, Criterion crit,
                                       const ModelContext& ctx,
                                       const DesignDensity& phi);

/// Minimizes a design criterion over densities on the grid by multiplicative
/// gradient (mirror descent) steps on the simplex with backtracking; the
/// criterion trace is non-increasing by construction.
OptimizeResult optimize_density(const BasisSet& basis, Criterion crit,
                                const ModelContext& ctx, const Grid& grid,
                                const OptimizerOptions& opts = {});

struct MaximinProblem {
  std::vector<double> alphas; // long-range exponents, each in (0, 1)
  BasisSet basis;
  double c = 1.0;             // kernel constant shared across alphas
};

struct MaximinResult {
  DesignDensity density;
  std::vector<double> profile; // efficiency per alpha
  double min_efficiency = 0.0;
  int iterations = 0;
};

/// Maximizes the minimum efficiency over the alpha set relative to the
/// per-alpha optimal densities (smoothed-min ascent with a rising
/// temperature schedule, then an exact-min report).
MaximinResult maximin_design(const MaximinProblem& problem, const Grid& grid,
                             const OptimizerOptions& opts = {});

} // namespace lrd

#endif
