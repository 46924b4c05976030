#include <cmath>

#include <doctest.h>

#include "lrdesign/shortrange.hpp"
#include "lrdesign/tables.hpp"

using namespace lrd;

namespace {
const Grid kGrid(1.0, 1001);
const BasisSet kSlope = BasisSet::through_origin();
} // namespace

TEST_CASE("reference parameters for the exponential correlation") {
  // published reference values (table 3)
  const double rows[][6] = {{0.5, 0.5, 3.41, 0.32, 0.30, 0.89},
                            {0.5, 0.1, 9.82, 3.23, 0.57, 0.63},
                            {0.5, 0.9, 2.38, 0.08, 0.18, 0.97},
                            {0.1, 0.5, 12.70, 0.22, 0.13, 0.99},
                            {2.5, 0.5, 1.45, 0.54, 0.61, 0.57}};
  for (auto& r : rows) {
    const ShortRangeContext ctx{r[0], r[1]};
    const auto sol = solve_shortrange(kSlope, ctx, kGrid);
    CHECK(sol.converged);
    CHECK(std::fabs(sol.mu - r[2]) < 0.05);
    CHECK(std::fabs(sol.tau - r[3]) < 0.02);
    CHECK(std::fabs(std::sqrt(sol.tau / sol.mu) - r[4]) < 0.01);
    const double eff = efficiency(DesignDensity::uniform(kGrid), sol.density,
                                  Criterion::Single, kSlope,
                                  ModelContext::short_range(r[0], r[1]));
    CHECK(std::fabs(eff - r[5]) < 0.01);
  }
}

TEST_CASE("solution structure") {
  const ShortRangeContext ctx{0.5, 0.5};
  const auto sol = solve_shortrange(kSlope, ctx, kGrid);
  CHECK(sol.density.total() == doctest::Approx(1.0).epsilon(1e-10));
  const int n = kGrid.size();
  for (int i = 0; i < n; ++i)
    CHECK(sol.density.values[i] ==
          doctest::Approx(sol.density.values[n - 1 - i]).epsilon(1e-12));
  // mu identity: mu = 1/(2 gamma) + 2 I[f^2 Q(1/p) p] / I[f^2 p]
  const ShortRangeKernel k{ctx.lambda};
  double a = 0.0, b = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = kGrid.node(i), p = sol.density.values[i];
    if (p <= 0.0) continue;
    a += kGrid.weight(i) * t * t * p;
    b += kGrid.weight(i) * t * t * k.q(1.0 / p) * p;
  }
  CHECK(sol.mu ==
        doctest::Approx(1.0 / (2.0 * ctx.gamma) + 2.0 * b / a).epsilon(1e-4));
}

TEST_CASE("cross efficiencies against the published grids") {
  // spot-check one cell of each direction at full grid resolution
  const ShortRangeContext ctx{0.5, 0.5};
  const auto sr = solve_shortrange(kSlope, ctx, kGrid);
  const double e_lr = cross_efficiency_lr_of_sr(sr.density, kSlope,
                                                LimitKernel{0.5, 1.0});
  CHECK(std::fabs(e_lr - 0.96) < 0.02); // published reference (table 4)

  const auto lr = solve_one_param(kSlope, LimitKernel{0.5, 1.0}, kGrid);
  const double e_sr = cross_efficiency_sr_of_lr(lr.density, kSlope, ctx);
  CHECK(std::fabs(e_sr - 0.94) < 0.02); // published reference (table 5)
}

TEST_CASE("table helpers expose the published constants") {
  CHECK(table1_reference()[2].mu == doctest::Approx(4.32));
  CHECK(table2_reference()[0] == doctest::Approx(0.84));
  CHECK(table3_reference()[4].lambda == doctest::Approx(2.5));
  CHECK(table4_reference()[0][3] == doctest::Approx(1.00));
  CHECK(table5_reference()[0][1] == doctest::Approx(0.40));
}

TEST_CASE("input validation") {
  CHECK_THROWS(ShortRangeContext{0.0, 0.5}.validate());
  CHECK_THROWS(ShortRangeContext{1.0, 0.0}.validate());
  CHECK_THROWS(ShortRangeContext{1.0, 1.5}.validate());
  CHECK_THROWS(solve_shortrange(BasisSet::linear(), ShortRangeContext{1.0, 0.5},
                                kGrid));
}
