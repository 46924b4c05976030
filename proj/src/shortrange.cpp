#include "lrdesign/shortrange.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lrdesign/integrate.hpp"
#include "lrdesign/rootfind.hpp"
#include "detail_support.hpp"

namespace lrd {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ShortRangeProblem {
  std::function<double(double)> f;
  ShortRangeKernel kernel;
  double gamma;
  double T;

  double bracket(double mu, double tau, double t) const {
    if (tau == 0.0) return mu;
    const double f2 = f(t) * f(t);
    return f2 > 0.0 ? mu - tau / f2 : -kInf;
  }

  double density(double mu, double tau, double t) const {
    const double br = bracket(mu, tau, t);
    if (br <= 0.0) return 0.0;
    return 1.0 / kernel.h_inv(br);
  }

  struct Moments {
    double mass; // I[p]
    double a;    // I[f^2 p]
    double b;    // I[f^2 Q(1/p) p]
    std::vector<double> breakpoints;
  };

  Moments moments(double mu, double tau) const {
    Moments m;
    m.breakpoints = detail::bracket_breakpoints(
        [&](double t) { return bracket(mu, tau, t); }, T);
    auto p = [&](double t) { return density(mu, tau, t); };
    m.mass = integrate_pieces(p, m.breakpoints);
    m.a = integrate_pieces([&](double t) { return f(t) * f(t) * p(t); },
                           m.breakpoints);
    m.b = integrate_pieces(
        [&](double t) {
          const double v = p(t);
          return v > 0.0 ? f(t) * f(t) * kernel.q(1.0 / v) * v : 0.0;
        },
        m.breakpoints);
    return m;
  }

  Vec2 residual(const Vec2& x) const {
    const Moments m = moments(x[0], x[1]);
    const double mu_target = 1.0 / (2.0 * gamma) + 2.0 * m.b / m.a;
    return {m.mass - 1.0, (x[0] - mu_target) / (1.0 + std::fabs(x[0]))};
  }

  double max_f2() const {
    double v = 0.0;
    for (int i = 0; i <= 512; ++i) {
      const double t = -T + 2.0 * T * i / 512;
      v = std::max(v, f(t) * f(t));
    }
    return v;
  }
};

} // namespace

void ShortRangeContext::validate() const {
  if (!(lambda > 0.0))
    throw std::domain_error("ShortRangeContext: lambda must be > 0");
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw std::domain_error("ShortRangeContext: gamma must be in (0, 1]");
}

FixedPointSolution solve_shortrange(const BasisSet& basis,
                                    const ShortRangeContext& ctx,
                                    const Grid& grid,
                                    const SolveOptions& opts) {
  if (basis.size() != 1)
    throw std::invalid_argument("solve_shortrange: basis must have p = 1");
  ctx.validate();
  const double T = grid.half_width();
  ShortRangeProblem prob{basis.funcs[0], ShortRangeKernel{ctx.lambda},
                         ctx.gamma, T};

  const double fmax2 = prob.max_f2();
  if (!(fmax2 > 0.0))
    throw std::domain_error("solve_shortrange: f vanishes identically");

  // initial multipliers from the uniform density p0 = 1/(2T)
  const double p0 = 0.5 / T;
  const double q0 = prob.kernel.q(1.0 / p0);
  const double qp0 = prob.kernel.q_prime(1.0 / p0);
  const double f2int =
      integrate([&](double t) { return prob.f(t) * prob.f(t); }, -T, T);
  const double mu0 = 1.0 / (2.0 * ctx.gamma) + 2.0 * q0;
  double tau0 = (1.0 / (2.0 * ctx.gamma)) * f2int * p0 + f2int * p0 * q0 +
                f2int * qp0;
  if (tau0 <= 0.0) tau0 = 0.1 * mu0 * fmax2;

  auto valid = [&](const Vec2& x) {
    return x[0] > 0.0 && x[1] >= 0.0 && x[1] < x[0] * fmax2;
  };

  FixedPointSolution sol{0.0, 0.0, DesignDensity::uniform(grid), 0.0, 0, false,
                         0.0};
  auto br = broyden2([&](const Vec2& v) { return prob.residual(v); },
                     {mu0, tau0}, valid, opts.tol, opts.max_iter);
  Vec2 x = br.x;
  sol.iterations = br.iterations;
  sol.converged = br.converged;
  sol.residual_norm = std::hypot(br.residual[0], br.residual[1]);

  sol.mu = x[0];
  sol.tau = x[1];
  auto m = prob.moments(sol.mu, sol.tau);
  sol.support_edge = detail::hole_radius(m.breakpoints);
  std::vector<double> values(grid.size());
  for (int i = 0; i < grid.size(); ++i)
    values[i] = prob.density(sol.mu, sol.tau, grid.node(i));
  sol.density = DesignDensity(grid, std::move(values));
  sol.density.normalize();
  return sol;
}

double cross_efficiency_lr_of_sr(const DesignDensity& candidate,
                                 const BasisSet& basis,
                                 const LimitKernel& kernel) {
  const auto ref = solve_one_param(basis, kernel, candidate.grid);
  return efficiency(candidate, ref.density, Criterion::Single, basis,
                    ModelContext::long_range(kernel));
}

double cross_efficiency_sr_of_lr(const DesignDensity& candidate,
                                 const BasisSet& basis,
                                 const ShortRangeContext& ctx) {
  const auto ref = solve_shortrange(basis, ctx, candidate.grid);
  return efficiency(candidate, ref.density, Criterion::Single, basis,
                    ModelContext::short_range(ctx.lambda, ctx.gamma));
}

} // namespace lrd
