#include "lrdesign/oneparam.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lrdesign/integrate.hpp"
#include "lrdesign/rootfind.hpp"
#include "detail_support.hpp"

namespace lrd {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct OneParamProblem {
  std::function<double(double)> f;
  LimitKernel kernel;
  double T;

  double bracket(double mu, double tau, double t) const {
    if (tau == 0.0) return mu;
    const double f2 = f(t) * f(t);
    return f2 > 0.0 ? mu - tau / f2 : -kInf;
  }

  double density(double mu, double tau, double t) const {
    const double br = bracket(mu, tau, t);
    if (br <= 0.0) return 0.0;
    const double a = kernel.alpha;
    if (a < 1.0)
      return std::pow((1.0 - a) / (kernel.c * (1.0 + a)) * br, 1.0 / a);
    return br / (2.0 * kernel.c);
  }

  struct Moments {
    double mass;    // I[p]
    double a;       // I[f^2 p]
    double b;       // I[f^2 p^{1+alpha}]
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
    const double expo = 1.0 + kernel.alpha;
    m.b = integrate_pieces(
        [&](double t) { return f(t) * f(t) * std::pow(p(t), expo); },
        m.breakpoints);
    return m;
  }

  // the (4.2)-type multiplier implied by the current density
  double mu_update(const Moments& m) const {
    const double a = kernel.alpha;
    const double scale = a < 1.0 ? 2.0 * kernel.c / (1.0 - a) : 2.0 * kernel.c;
    return scale * m.b / m.a;
  }

  Vec2 residual(const Vec2& x) const {
    const Moments m = moments(x[0], x[1]);
    return {m.mass - 1.0, (x[0] - mu_update(m)) / (1.0 + std::fabs(x[0]))};
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

std::vector<double> density_from_multipliers(const BasisSet& basis,
                                             const LimitKernel& kernel,
                                             double mu, double tau,
                                             const Grid& grid) {
  if (basis.size() != 1)
    throw std::invalid_argument("density_from_multipliers: basis must have p = 1");
  if (!(mu > 0.0))
    throw std::domain_error("density_from_multipliers: mu must be > 0");
  kernel.validate();
  OneParamProblem prob{basis.funcs[0], kernel, grid.half_width()};
  std::vector<double> out(grid.size());
  for (int i = 0; i < grid.size(); ++i)
    out[i] = prob.density(mu, tau, grid.node(i));
  return out;
}

FixedPointSolution solve_one_param(const BasisSet& basis,
                                   const LimitKernel& kernel, const Grid& grid,
                                   const SolveOptions& opts) {
  if (basis.size() != 1)
    throw std::invalid_argument("solve_one_param: basis must have p = 1");
  kernel.validate();
  const double T = grid.half_width();
  OneParamProblem prob{basis.funcs[0], kernel, T};

  const double fmax2 = prob.max_f2();
  if (!(fmax2 > 0.0))
    throw std::domain_error("solve_one_param: f vanishes identically");

  // initial multipliers from the uniform density
  const double a = kernel.alpha;
  const double p0 = 0.5 / T;
  double mu0, tau0;
  if (a < 1.0) {
    mu0 = 2.0 * kernel.c / (1.0 - a) * std::pow(p0, a);
    const double f2int = integrate(
        [&](double t) { return prob.f(t) * prob.f(t); }, -T, T);
    tau0 = kernel.c * std::pow(p0, 1.0 + a) * f2int; // c I[f^2 p0^{1+alpha}]
  } else {
    mu0 = 2.0 * kernel.c * p0;
    tau0 = 0.0;
  }

  auto valid = [&](const Vec2& x) {
    return x[0] > 0.0 && x[1] >= 0.0 && x[1] < x[0] * fmax2;
  };

  FixedPointSolution sol{0.0, 0.0, DesignDensity::uniform(grid), 0.0, 0, false,
                         0.0};
  Vec2 x{mu0, tau0};
  if (!opts.force_picard) {
    auto br = broyden2([&](const Vec2& v) { return prob.residual(v); }, x,
                       valid, opts.tol, opts.max_iter);
    x = br.x;
    sol.iterations = br.iterations;
    sol.converged = br.converged;
    sol.residual_norm = std::hypot(br.residual[0], br.residual[1]);
  }

  if (!sol.converged) {
    // damped Picard on the multiplier identities
    double mu = mu0, tau = tau0;
    const double relax = opts.picard_relaxation;
    for (int it = 0; it < opts.max_iter; ++it) {
      auto m = prob.moments(mu, tau);
      // renormalized density has moments a/mass^{...}: rescale explicitly
      const double s = 1.0 / m.mass;
      const double a1 = m.a * s;
      const double b1 = m.b * std::pow(s, 1.0 + kernel.alpha);
      const double scale =
          kernel.alpha < 1.0 ? 2.0 * kernel.c / (1.0 - kernel.alpha)
                             : 2.0 * kernel.c;
      const double mu_new = scale * b1 / a1;
      const double tau_target =
          kernel.alpha < 1.0 ? kernel.c * b1 : 0.0; // tau = c I[f^2 p^{1+a}]
      mu = (1.0 - relax) * mu + relax * mu_new;
      tau = (1.0 - relax) * tau + relax * tau_target;
      ++sol.iterations;
      Vec2 r = prob.residual({mu, tau});
      sol.residual_norm = std::hypot(r[0], r[1]);
      if (sol.residual_norm <= opts.tol) {
        sol.converged = true;
        break;
      }
    }
    x = {mu, tau};
  }

  sol.mu = x[0];
  sol.tau = x[1];
  auto m = prob.moments(sol.mu, sol.tau);
  sol.support_edge = detail::hole_radius(m.breakpoints);
  sol.density = DesignDensity(
      grid, density_from_multipliers(basis, kernel, sol.mu, sol.tau, grid));
  // renormalize on the grid quadrature and rescale the multipliers to stay
  // consistent: p -> s p corresponds to (mu, tau) -> s^alpha (mu, tau)
  const double s = 1.0 / sol.density.total();
  sol.density.normalize();
  const double factor = std::pow(s, kernel.alpha);
  sol.mu *= factor;
  sol.tau *= factor; // hole radius sqrt(tau/mu) is unchanged
  return sol;
}

double optimality_check(const DesignDensity& phi, const BasisSet& basis,
                        const LimitKernel& kernel, double mu, double tau) {
  if (basis.size() != 1)
    throw std::invalid_argument("optimality_check: basis must have p = 1");
  kernel.validate();
  double worst = 0.0;
  for (int i = 0; i < phi.grid.size(); ++i) {
    const double t = phi.grid.node(i);
    const double f2 = basis.funcs[0](t) * basis.funcs[0](t);
    const double p = phi.values[i];
    double v;
    if (p > 0.0) {
      v = std::fabs(f2 * (kernel.h(1.0 / p) - mu) + tau);
    } else {
      v = std::max(0.0, mu * f2 - tau);
    }
    worst = std::max(worst, v);
  }
  return worst;
}

} // namespace lrd
