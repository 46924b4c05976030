#include "lrdesign/optimizer.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "lrdesign/oneparam.hpp"

namespace lrd {
namespace {

struct CritEval {
  double value = 0.0;
  std::vector<double> delta; // functional derivative at the nodes
};

// Derivative factor of the dependence matrix entry at a node:
// long-range: d/dphi [c/(1-a) phi^{1+a}] = c(1+a)/(1-a) phi^a,
// short-range: d/dphi [phi + 2 gamma Q(1/phi) phi] = 1 + 2 gamma H(1/phi).
double dr_factor(const ModelContext& ctx, double phi) {
  if (ctx.kind == ModelContext::Kind::LongRange) {
    const double a = ctx.kernel.alpha;
    const double coeff = a < 1.0 ? ctx.kernel.c * (1.0 + a) / (1.0 - a)
                                 : 2.0 * ctx.kernel.c;
    return coeff * std::pow(phi, a);
  }
  ShortRangeKernel k{ctx.lambda};
  return phi > 0.0 ? 1.0 + 2.0 * ctx.gamma * k.h(1.0 / phi) : 1.0;
}

CritEval eval_with_gradient(const BasisSet& basis, Criterion crit,
                            const ModelContext& ctx, const DesignDensity& phi) {
  const int p = basis.size();
  const Grid& grid = phi.grid;
  const Matrix w = w_matrix(basis, phi);
  const Matrix r = ctx.kind == ModelContext::Kind::LongRange
                       ? r_matrix_longrange(basis, phi, ctx.kernel)
                       : r_matrix_shortrange(basis, phi, ctx.lambda, ctx.gamma);

  CritEval out;
  out.delta.resize(grid.size());
  Eigen::LDLT<Matrix> wldlt(w);

  if (crit == Criterion::D) {
    Eigen::LDLT<Matrix> rldlt(r);
    const Matrix psi = psi_matrix(w, r);
    out.value = criterion_eval(crit, psi);
    Eigen::VectorXd fv(p);
    for (int k = 0; k < grid.size(); ++k) {
      const double t = grid.node(k);
      for (int i = 0; i < p; ++i) fv(i) = basis.eval(i, t);
      const double fr = fv.dot(rldlt.solve(fv));
      const double fw = fv.dot(wldlt.solve(fv));
      out.delta[k] = out.value / p *
                     (dr_factor(ctx, phi.values[k]) * fr - 2.0 * fw);
    }
    return out;
  }

  const int j = crit == Criterion::Single ? 0 : 1;
  if ((crit == Criterion::Single && p != 1) ||
      (crit == Criterion::Slope && p != 2))
    throw std::invalid_argument("optimize_density: criterion/basis mismatch");
  Eigen::VectorXd ej = Eigen::VectorXd::Zero(p);
  ej(j) = 1.0;
  const Eigen::VectorXd u = wldlt.solve(ej);
  const Eigen::VectorXd v = wldlt.solve(r * u);
  out.value = u.dot(r * u);
  Eigen::VectorXd fv(p);
  for (int k = 0; k < grid.size(); ++k) {
    const double t = grid.node(k);
    for (int i = 0; i < p; ++i) fv(i) = basis.eval(i, t);
    const double fu = fv.dot(u);
    out.delta[k] =
        dr_factor(ctx, phi.values[k]) * fu * fu - 2.0 * fu * fv.dot(v);
  }
  return out;
}

void symmetrize(std::vector<double>& v) {
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n / 2; ++i) {
    const double m = 0.5 * (v[i] + v[n - 1 - i]);
    v[i] = m;
    v[n - 1 - i] = m;
  }
}

double mean_delta(const Grid& grid, const std::vector<double>& phi,
                  const std::vector<double>& delta) {
  double s = 0.0;
  for (int k = 0; k < grid.size(); ++k)
    s += grid.weight(k) * phi[k] * delta[k];
  return s;
}

OptimizeResult run_descent(const BasisSet& basis, Criterion crit,
                           const ModelContext& ctx, const Grid& grid,
                           std::vector<double> start,
                           const OptimizerOptions& opts) {
  DesignDensity phi(grid, std::move(start));
  phi.normalize();
  OptimizeResult res{phi, 0.0, 0.0, 0, false, {}, {}};

  CritEval cur = eval_with_gradient(basis, crit, ctx, phi);
  double eta = opts.step0;
  for (int it = 0; it < opts.max_iter; ++it) {
    std::vector<double> d = cur.delta;
    if (opts.symmetric) symmetrize(d);
    const double dbar = mean_delta(grid, phi.values, d);
    double scale = 0.0, worst = 0.0;
    for (int k = 0; k < grid.size(); ++k) {
      scale = std::max(scale, std::fabs(d[k] - dbar));
      worst = std::max(worst, dbar - d[k]);
    }
    const double viol = worst / std::max(std::fabs(cur.value), 1e-300);
    res.trace.push_back({it, cur.value, viol});
    res.stationarity = viol;
    res.iterations = it;
    if (viol <= opts.tol_stationarity) {
      res.converged = true;
      break;
    }
    if (scale == 0.0) {
      res.converged = true;
      break;
    }

    bool accepted = false;
    DesignDensity cand = phi;
    CritEval cnew;
    for (int bt = 0; bt < 50; ++bt) {
      for (int k = 0; k < grid.size(); ++k)
        cand.values[k] = phi.values[k] * std::exp(-eta * (d[k] - dbar) / scale);
      cand.normalize();
      cnew = eval_with_gradient(basis, crit, ctx, cand);
      if (cnew.value <= cur.value) {
        accepted = true;
        break;
      }
      eta *= 0.5;
    }
    if (!accepted) break;
    const double decrease = (cur.value - cnew.value) /
                            std::max(std::fabs(cur.value), 1e-300);
    phi = cand;
    cur = cnew;
    eta = std::min(eta * opts.step_growth, 50.0);
    if (opts.tol_decrease > 0.0 && decrease < opts.tol_decrease) {
      res.iterations = it + 1;
      break;
    }
  }
  res.density = phi;
  res.criterion = cur.value;
  return res;
}

} // namespace

std::vector<double> criterion_gradient(const BasisSet& basis, Criterion crit,
                                       const ModelContext& ctx,
                                       const DesignDensity& phi) {
  return eval_with_gradient(basis, crit, ctx, phi).delta;
}

OptimizeResult optimize_density(const BasisSet& basis, Criterion crit,
                                const ModelContext& ctx, const Grid& grid,
                                const OptimizerOptions& opts) {
  std::vector<double> uniform(grid.size(), 0.5 / grid.half_width());
  OptimizeResult res = run_descent(basis, crit, ctx, grid, uniform, opts);

  if (opts.restarts > 0) {
    std::mt19937 rng(opts.seed);
    std::normal_distribution<double> noise(0.0, 0.2);
    for (int r = 0; r < opts.restarts; ++r) {
      std::vector<double> start(grid.size());
      for (double& v : start) v = 0.5 / grid.half_width() *
                                  std::exp(noise(rng));
      if (opts.symmetric) symmetrize(start);
      OptimizeResult alt = run_descent(basis, crit, ctx, grid, start, opts);
      res.restart_criteria.push_back(alt.criterion);
    }
  }
  return res;
}

MaximinResult maximin_design(const MaximinProblem& problem, const Grid& grid,
                             const OptimizerOptions& opts) {
  if (problem.basis.size() != 1)
    throw std::invalid_argument("maximin_design: basis must have p = 1");
  if (problem.alphas.empty())
    throw std::invalid_argument("maximin_design: empty alpha set");
  for (double a : problem.alphas)
    if (!(a > 0.0 && a < 1.0))
      throw std::domain_error("maximin_design: alpha must be in (0, 1)");

  const auto& f = problem.basis.funcs[0];
  const int n = grid.size();
  const int m = static_cast<int>(problem.alphas.size());

  // per-alpha reference criterion values
  std::vector<double> ref(m);
  std::vector<LimitKernel> kernels(m);
  for (int i = 0; i < m; ++i) {
    kernels[i] = LimitKernel{problem.alphas[i], problem.c};
    const auto sol = solve_one_param(problem.basis, kernels[i], grid);
    ref[i] = criterion_value(Criterion::Single, problem.basis, sol.density,
                             ModelContext::long_range(kernels[i]));
  }

  std::vector<double> f2(n);
  for (int k = 0; k < n; ++k) f2[k] = f(grid.node(k)) * f(grid.node(k));

  auto psi_all = [&](const std::vector<double>& phi, std::vector<double>& psi,
                     double& A) {
    A = 0.0;
    for (int k = 0; k < n; ++k) A += grid.weight(k) * f2[k] * phi[k];
    for (int i = 0; i < m; ++i) {
      const double a = problem.alphas[i];
      double B = 0.0;
      for (int k = 0; k < n; ++k)
        B += grid.weight(k) * f2[k] * std::pow(phi[k], 1.0 + a);
      psi[i] = problem.c / (1.0 - a) * B / (A * A);
    }
  };

  auto min_eff = [&](const std::vector<double>& psi) {
    double v = ref[0] / psi[0];
    for (int i = 1; i < m; ++i) v = std::min(v, ref[i] / psi[i]);
    return v;
  };

  DesignDensity phi = DesignDensity::uniform(grid);
  std::vector<double> psi(m);
  double A = 0.0;
  int total_iters = 0;

  const double temps[] = {10.0, 100.0, 1000.0};
  const int per_phase = std::max(1, opts.max_iter / 3);
  for (double theta : temps) {
    auto smoothed = [&](const std::vector<double>& ps) {
      // soft-min of the efficiencies at temperature theta
      double mn = min_eff(ps);
      double s = 0.0;
      for (int i = 0; i < m; ++i) s += std::exp(-theta * (ref[i] / ps[i] - mn));
      return mn - std::log(s) / theta;
    };
    double eta = opts.step0;
    psi_all(phi.values, psi, A);
    double sval = smoothed(psi);
    for (int it = 0; it < per_phase; ++it, ++total_iters) {
      // softmax weights over the active alphas
      const double mn = min_eff(psi);
      std::vector<double> wts(m);
      double wsum = 0.0;
      for (int i = 0; i < m; ++i) {
        wts[i] = std::exp(-theta * (ref[i] / psi[i] - mn));
        wsum += wts[i];
      }
      // ascent direction: d smoothed-min / d phi(t)
      std::vector<double> delta(n, 0.0);
      for (int i = 0; i < m; ++i) {
        const double a = problem.alphas[i];
        const double wi = wts[i] / wsum;
        const double eff = ref[i] / psi[i];
        const double coeff = -wi * eff / psi[i];
        const double dfac = problem.c * (1.0 + a) / (1.0 - a);
        for (int k = 0; k < n; ++k) {
          const double dpsi = dfac * f2[k] * std::pow(phi.values[k], a) /
                                  (A * A) -
                              2.0 * psi[i] * f2[k] / A;
          delta[k] += coeff * dpsi;
        }
      }
      if (opts.symmetric) symmetrize(delta);
      const double dbar = mean_delta(grid, phi.values, delta);
      double scale = 0.0;
      for (int k = 0; k < n; ++k)
        scale = std::max(scale, std::fabs(delta[k] - dbar));
      if (scale == 0.0) break;

      bool accepted = false;
      DesignDensity cand = phi;
      std::vector<double> psic(m);
      double Ac = 0.0, snew = 0.0;
      for (int bt = 0; bt < 50; ++bt) {
        for (int k = 0; k < n; ++k)
          cand.values[k] =
              phi.values[k] * std::exp(eta * (delta[k] - dbar) / scale);
        cand.normalize();
        psi_all(cand.values, psic, Ac);
        snew = smoothed(psic);
        if (snew >= sval) {
          accepted = true;
          break;
        }
        eta *= 0.5;
      }
      if (!accepted) break;
      const double gain = snew - sval;
      phi = cand;
      psi = psic;
      A = Ac;
      sval = snew;
      eta = std::min(eta * opts.step_growth, 50.0);
      if (gain < 1e-12 * std::max(1.0, std::fabs(sval))) break;
    }
  }

  MaximinResult out{phi, {}, 0.0, total_iters};
  psi_all(phi.values, psi, A);
  out.profile.resize(m);
  for (int i = 0; i < m; ++i) out.profile[i] = ref[i] / psi[i];
  out.min_efficiency = min_eff(psi);
  return out;
}

} // namespace lrd
