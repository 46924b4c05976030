#include <cmath>
#include <sstream>

#include <doctest.h>

#include "lrdesign/oneparam.hpp"
#include "lrdesign/verify.hpp"

using namespace lrd;

TEST_CASE("quantile spacing of the uniform density") {
  const Grid g(1.0, 1001);
  const auto u = DesignDensity::uniform(g);
  const auto d3 = design_points_from_density(u, 3);
  CHECK(d3.points[0] == doctest::Approx(-1.0));
  CHECK(d3.points[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(d3.points[2] == doctest::Approx(1.0));
  const auto d9 = design_points_from_density(u, 9);
  for (int i = 0; i < 9; ++i)
    CHECK(d9.points[i] ==
          doctest::Approx(-1.0 + 0.25 * i).scale(1.0).epsilon(1e-12));
}

TEST_CASE("symmetric densities give symmetric designs") {
  const Grid g(1.0, 1001);
  const auto d = DesignDensity::from_function(
      g, [](double t) { return 0.2 + t * t; });
  const auto pts = design_points_from_density(d, 21);
  for (int i = 0; i < 21; ++i)
    CHECK(pts.points[i] ==
          doctest::Approx(-pts.points[20 - i]).scale(1.0).epsilon(1e-9));
}

TEST_CASE("support holes yield no interior points") {
  const Grid g(1.0, 2001);
  const auto sol =
      solve_one_param(BasisSet::through_origin(), LimitKernel{0.5, 1.0}, g);
  const auto pts = design_points_from_density(sol.density, 101);
  for (double t : pts.points) CHECK(std::fabs(t) > 0.39);
}

TEST_CASE("white noise reduces to the classical covariance") {
  const Grid g(1.0, 1001);
  const auto pts =
      design_points_from_density(DesignDensity::uniform(g), 50);
  const auto basis = BasisSet::linear();
  const auto m = CorrelationModel::cauchy(0.5, 1.0);
  const Matrix d = exact_lse_covariance(basis, pts, m, 0.0);
  Matrix xtx = Matrix::Zero(2, 2);
  for (double t : pts.points) {
    Eigen::Vector2d f(1.0, t);
    xtx += f * f.transpose();
  }
  const Matrix want = xtx.inverse();
  CHECK((d - want).norm() < 1e-12 * want.norm());
}

TEST_CASE("location model matches the double-sum oracle") {
  const Grid g(1.0, 1001);
  const auto pts =
      design_points_from_density(DesignDensity::uniform(g), 40);
  const auto m = CorrelationModel::cauchy(0.5, 1.0);
  const Matrix d =
      exact_lse_covariance(BasisSet::location(), pts, m, 1.0);
  const int n = pts.n();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s += rho_eval(m, n * (pts.points[i] - pts.points[j]));
  CHECK(d(0, 0) == doctest::Approx(s / (n * n)).epsilon(1e-13));

  // hand value for N = 2 on {-1, 1}: (1/4)(2 + 2 rho(4))
  FiniteDesign two;
  two.half_width = 1.0;
  two.points = {-1.0, 1.0};
  const Matrix d2 = exact_lse_covariance(BasisSet::location(), two, m, 1.0);
  CHECK(d2(0, 0) ==
        doctest::Approx(0.25 * (2.0 + 2.0 * rho_eval(m, 4.0))).epsilon(1e-14));
}

TEST_CASE("covariance output is symmetric PSD and capped") {
  const Grid g(1.0, 501);
  const auto pts =
      design_points_from_density(DesignDensity::uniform(g), 60);
  const auto m = CorrelationModel::cauchy(0.5, 1.0);
  const Matrix d = exact_lse_covariance(BasisSet::linear(), pts, m, 0.7);
  CHECK((d - d.transpose()).norm() < 1e-12);
  Eigen::SelfAdjointEigenSolver<Matrix> es(d);
  CHECK(es.eigenvalues().minCoeff() > -1e-10);

  FiniteDesign big;
  big.half_width = 1.0;
  big.points.assign(6000, 0.5);
  CHECK_THROWS(exact_lse_covariance(BasisSet::location(), big, m, 1.0));
}

TEST_CASE("convergence report on the geometric ladder") {
  const Grid g(1.0, 1001);
  const auto m = CorrelationModel::cauchy(0.5, 1.0);
  const auto rep =
      convergence_report(BasisSet::location(), DesignDensity::uniform(g), m,
                         1.0, {200, 800, 3200});
  REQUIRE(rep.rel_errors.size() == 3);
  CHECK(rep.monotone_decreasing);
  CHECK(rep.fitted_slope > 0.0);
  CHECK(rep.d_values[0] == doctest::Approx(std::sqrt(200.0)));

  std::stringstream ss;
  rep.write_csv(ss);
  CHECK(ss.str().rfind("N,d_alpha,rel_error", 0) == 0);
  CHECK(ss.str().find("slope,") != std::string::npos);
}

TEST_CASE("off-diagonal terms vanish for symmetric designs") {
  const Grid g(1.0, 1001);
  const auto m = CorrelationModel::cauchy(0.5, 1.0);
  const auto pts =
      design_points_from_density(DesignDensity::uniform(g), 801);
  const Matrix d =
      exact_lse_covariance(BasisSet::linear(), pts, m, 0.5, true);
  CHECK(std::fabs(d(0, 1)) < 1e-3 * d.norm());
}

TEST_CASE("input validation") {
  const Grid g(1.0, 101);
  const auto m = CorrelationModel::cauchy(0.5, 1.0);
  CHECK_THROWS(design_points_from_density(DesignDensity::uniform(g), 1));
  CHECK_THROWS(convergence_report(BasisSet::location(),
                                  DesignDensity::uniform(g),
                                  CorrelationModel::exponential(1.0), 1.0,
                                  {100, 200}));
  CHECK_THROWS(convergence_report(BasisSet::location(),
                                  DesignDensity::uniform(g), m, 1.0,
                                  {200, 200}));
  // gamma = 0 under long-range scaling: the prediction vanishes
  CHECK_THROWS(convergence_report(BasisSet::location(),
                                  DesignDensity::uniform(g), m, 0.0,
                                  {100, 200}));
}
