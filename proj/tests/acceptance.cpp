// Acceptance gate: one PASS/FAIL line per criterion. Run with a criterion
// number 1..8 or no argument for the full suite.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "lrdesign/optimizer.hpp"
#include "lrdesign/shortrange.hpp"
#include "lrdesign/special.hpp"
#include "lrdesign/tables.hpp"
#include "lrdesign/verify.hpp"

using namespace lrd;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

// criterion 1: one-parameter solver vs the published table
Check criterion1() {
  Check c;
  const Grid grid(1.0, 2001);
  const auto got = compute_table1(grid);
  const auto want = table1_reference();
  for (int i = 0; i < 5; ++i) {
    const double mu_tol = want[i].alpha > 0.9 ? 0.01 * want[i].mu : 0.05;
    c.require(std::fabs(got[i].mu - want[i].mu) <= mu_tol,
              "mu[" + num(want[i].alpha) + "]=" + num(got[i].mu));
    c.require(std::fabs(got[i].tau - want[i].tau) <= 0.02,
              "tau[" + num(want[i].alpha) + "]=" + num(got[i].tau));
    c.require(std::fabs(got[i].edge - want[i].edge) <= 0.01,
              "edge[" + num(want[i].alpha) + "]=" + num(got[i].edge));
    c.require(std::fabs(got[i].eff_uniform - want[i].eff_uniform) <= 0.01,
              "eff[" + num(want[i].alpha) + "]=" + num(got[i].eff_uniform));
  }
  return c;
}

// criterion 2: published maximin density profile + own optimizer profile
Check criterion2() {
  Check c;
  const Grid grid(1.0, 2001);
  const auto got = compute_table2(grid);
  const auto want = table2_reference();
  for (int i = 0; i < 9; ++i)
    c.require(std::fabs(got[i] - want[i]) <= 0.02,
              "eff[alpha=" + num(0.1 * (i + 1)) + "]=" + num(got[i]));

  MaximinProblem problem;
  for (int i = 1; i <= 9; ++i) problem.alphas.push_back(0.1 * i);
  problem.basis = BasisSet::through_origin();
  OptimizerOptions opts;
  opts.max_iter = 6000;
  const auto res = maximin_design(problem, Grid(1.0, 1001), opts);
  c.require(res.min_efficiency >= 0.83,
            "maximin min-profile=" + num(res.min_efficiency));
  return c;
}

// criterion 3: short-range solver vs the published table
Check criterion3() {
  Check c;
  const Grid grid(1.0, 2001);
  const auto got = compute_table3(grid);
  const auto want = table3_reference();
  for (int i = 0; i < 5; ++i) {
    const std::string tag =
        "[" + num(want[i].lambda) + "," + num(want[i].gamma) + "]";
    c.require(std::fabs(got[i].mu - want[i].mu) <= 0.05,
              "mu" + tag + "=" + num(got[i].mu));
    c.require(std::fabs(got[i].tau - want[i].tau) <= 0.02,
              "tau" + tag + "=" + num(got[i].tau));
    c.require(std::fabs(got[i].edge - want[i].edge) <= 0.01,
              "edge" + tag + "=" + num(got[i].edge));
    c.require(std::fabs(got[i].eff_uniform - want[i].eff_uniform) <= 0.01,
              "eff" + tag + "=" + num(got[i].eff_uniform));
  }
  return c;
}

// criterion 4: cross-efficiency grids
Check criterion4() {
  Check c;
  const Grid grid(1.0, 2001);
  const auto g4 = compute_table4(grid);
  const auto w4 = table4_reference();
  const auto g5 = compute_table5(grid);
  const auto w5 = table5_reference();
  for (int r = 0; r < 5; ++r)
    for (int col = 0; col < 5; ++col) {
      c.require(std::fabs(g4[r][col] - w4[r][col]) <= 0.02,
                "t4[" + std::to_string(r) + "][" + std::to_string(col) +
                    "]=" + num(g4[r][col]));
      c.require(std::fabs(g5[r][col] - w5[r][col]) <= 0.02,
                "t5[" + std::to_string(r) + "][" + std::to_string(col) +
                    "]=" + num(g5[r][col]));
    }
  return c;
}

// criterion 5: finite-N scaled covariance vs the asymptotic prediction
Check criterion5() {
  Check c;
  const Grid grid(1.0, 2001);
  const auto model = CorrelationModel::cauchy(0.5, 1.0);
  const auto rep =
      convergence_report(BasisSet::location(), DesignDensity::uniform(grid),
                         model, 1.0, {200, 800, 3200});
  std::string errs;
  for (double e : rep.rel_errors) errs += " " + num(e);
  c.require(rep.monotone_decreasing, "errors not strictly decreasing:" + errs);
  c.require(rep.rel_errors.back() <= 0.5 * rep.rel_errors.front(),
            "final error not <= half initial:" + errs);
  return c;
}

// criterion 6: special-function suite
Check criterion6() {
  Check c;
  for (double t = 0.0; t <= 30.0; t += 0.1) {
    const double e11 = mittag_leffler(1.0, 1.0, t);
    c.require(std::fabs(e11 - std::exp(-t)) <=
                  1e-10 * std::max(std::exp(-t), 1e-300),
              "(1,1) t=" + num(t));
    if (t > 0.0) {
      const double want = (1.0 - std::exp(-t)) / t;
      c.require(std::fabs(mittag_leffler(1.0, 2.0, t) - want) <= 1e-10 * want,
                "(1,2) t=" + num(t));
    }
  }
  const double want_half = std::exp(1.0) * std::erfc(1.0);
  const double got_half = mittag_leffler(0.5, 1.0, 1.0);
  c.require(std::fabs(got_half - want_half) <= 1e-8 * want_half,
            "(1/2,1,1)=" + num(got_half));
  return c;
}

// criterion 7: partial sums trend toward the limit kernel
Check criterion7() {
  Check c;
  const auto model = CorrelationModel::cauchy(0.5, 1.0);
  const double e3 = std::fabs(q_partial_sum(model, 1.0, 1000) / 2.0 - 1.0);
  const double e5 = std::fabs(q_partial_sum(model, 1.0, 100000) / 2.0 - 1.0);
  c.require(e5 < e3, "no decay: e3=" + num(e3) + " e5=" + num(e5));
  return c;
}

// criterion 8: optimizer vs closed form, optimality residuals, gradients
Check criterion8() {
  Check c;
  const Grid g(1.0, 501);
  const LimitKernel k{0.5, 1.0};
  const auto ref = solve_one_param(BasisSet::through_origin(), k, g);
  OptimizerOptions opts;
  opts.max_iter = 5000;
  const auto res = optimize_density(BasisSet::linear(), Criterion::Slope,
                                    ModelContext::long_range(k), g, opts);
  double sup = 0.0;
  for (int i = 0; i < g.size(); ++i)
    sup = std::max(sup,
                   std::fabs(res.density.values[i] - ref.density.values[i]));
  c.require(sup <= 1e-3, "optimizer sup-norm=" + num(sup));

  const Grid g1(1.0, 2001);
  for (double alpha : {0.05, 0.25, 0.5, 0.75, 0.95}) {
    const LimitKernel ka{alpha, 1.0};
    const auto sol = solve_one_param(BasisSet::through_origin(), ka, g1);
    const double r = optimality_check(sol.density, BasisSet::through_origin(),
                                      ka, sol.mu, sol.tau);
    c.require(r <= 1e-6, "optimality residual[" + num(alpha) + "]=" + num(r));
  }

  const Grid gs(1.0, 51);
  const auto d = DesignDensity::from_function(
      gs, [](double t) { return 1.0 + 0.5 * t * t; });
  const Criterion crits[] = {Criterion::Slope, Criterion::D};
  for (Criterion crit : crits) {
    const auto ctx = ModelContext::long_range(k);
    const auto grad = criterion_gradient(BasisSet::linear(), crit, ctx, d);
    for (int node : {5, 17, 29, 40}) {
      const double h = 1e-6;
      auto value_at = [&](double bump) {
        DesignDensity d2 = d;
        d2.values[node] += bump;
        return criterion_value(crit, BasisSet::linear(), d2, ctx);
      };
      const double fd = (value_at(h) - value_at(-h)) / (2.0 * h);
      const double an = gs.weight(node) * grad[node];
      c.require(std::fabs(fd - an) <= 1e-5 * std::fabs(an),
                "gradient node " + std::to_string(node) + ": fd=" + num(fd) +
                    " analytic=" + num(an));
    }
  }
  return c;
}

using CheckFn = Check (*)();
constexpr CheckFn kChecks[] = {criterion1, criterion2, criterion3, criterion4,
                               criterion5, criterion6, criterion7, criterion8};

int run_one(int idx) {
  const auto start = std::chrono::steady_clock::now();
  const Check c = kChecks[idx - 1]();
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::printf("criterion %d: %s (%.1fs)%s%s\n", idx, c.ok ? "PASS" : "FAIL",
              secs, c.detail.empty() ? "" : " -- ", c.detail.c_str());
  return c.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  if (argc > 1) {
    const int idx = std::atoi(argv[1]);
    if (idx < 1 || idx > 8) {
      std::fprintf(stderr, "usage: %s [1..8]\n", argv[0]);
      return 2;
    }
    return run_one(idx);
  }
  int failures = 0;
  for (int i = 1; i <= 8; ++i) failures += run_one(i);
  return failures == 0 ? 0 : 1;
}
