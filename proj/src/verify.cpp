#include "lrdesign/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace lrd {

void FiniteDesign::validate() const {
  if (n() < 2) throw std::invalid_argument("FiniteDesign: need N >= 2 points");
  for (int i = 0; i < n(); ++i) {
    if (std::fabs(points[i]) > half_width + 1e-12)
      throw std::invalid_argument("FiniteDesign: point outside [-T, T]");
    if (i > 0 && points[i] < points[i - 1])
      throw std::invalid_argument("FiniteDesign: points must be non-decreasing");
  }
}

FiniteDesign design_points_from_density(const DesignDensity& phi, int n) {
  if (n < 2)
    throw std::invalid_argument("design_points_from_density: need N >= 2");
  phi.validate();
  const Grid& grid = phi.grid;
  const int m = grid.size();
  const double h = grid.spacing();

  // cumulative trapezoid CDF at the nodes, forced monotone and pinned to [0,1]
  std::vector<double> cdf(m, 0.0);
  for (int i = 1; i < m; ++i) {
    cdf[i] = cdf[i - 1] + 0.5 * h * (phi.values[i - 1] + phi.values[i]);
    cdf[i] = std::max(cdf[i], cdf[i - 1]);
  }
  const double total = cdf[m - 1];
  if (!(total > 0.0))
    throw std::invalid_argument("design_points_from_density: zero mass");
  for (double& v : cdf) v /= total;

  FiniteDesign out;
  out.half_width = grid.half_width();
  out.points.resize(n);
  int seg = 0;
  for (int i = 0; i < n; ++i) {
    const double u = static_cast<double>(i) / (n - 1);
    while (seg < m - 2 && cdf[seg + 1] < u) ++seg;
    const double c0 = cdf[seg], c1 = cdf[seg + 1];
    double t;
    if (c1 > c0) {
      const double frac = std::clamp((u - c0) / (c1 - c0), 0.0, 1.0);
      t = grid.node(seg) + frac * h;
    } else {
      // flat stretch: the whole level range collapses to one point
      t = grid.node(seg);
    }
    out.points[i] = std::clamp(t, -out.half_width, out.half_width);
  }
  out.points.front() = grid.node(0); // u = 0 is the lower CDF range limit
  for (int i = 1; i < n; ++i)
    out.points[i] = std::max(out.points[i], out.points[i - 1]);
  out.validate();
  return out;
}

Matrix exact_lse_covariance(const BasisSet& basis, const FiniteDesign& design,
                            const CorrelationModel& model, double gamma,
                            bool long_range_scaling, int n_cap) {
  design.validate();
  model.validate();
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::domain_error("exact_lse_covariance: gamma must be in [0, 1]");
  const int n = design.n();
  if (n > n_cap)
    throw std::invalid_argument("exact_lse_covariance: N exceeds the cap");
  const int p = basis.size();

  Matrix x(n, p);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < p; ++i) x(j, i) = basis.eval(i, design.points[j]);

  Matrix sigma(n, n);
  for (int i = 0; i < n; ++i) {
    sigma(i, i) = 1.0;
    for (int j = 0; j < i; ++j) {
      const double v =
          gamma * rho_eval(model, n * (design.points[i] - design.points[j]));
      sigma(i, j) = v;
      sigma(j, i) = v;
    }
  }

  const Matrix xtx = x.transpose() * x;
  Eigen::LDLT<Matrix> ldlt(xtx);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
    throw std::runtime_error("exact_lse_covariance: singular X^T X");
  const Matrix b = ldlt.solve(x.transpose()); // (X^T X)^{-1} X^T
  Matrix d = b * sigma * b.transpose();
  d = 0.5 * (d + d.transpose()).eval();
  if (long_range_scaling) d *= n / d_norm(model, n);
  return d;
}

ConvergenceReport convergence_report(const BasisSet& basis,
                                     const DesignDensity& phi,
                                     const CorrelationModel& model,
                                     double gamma,
                                     const std::vector<std::int64_t>& n_list,
                                     int n_cap) {
  if (!model.long_range())
    throw std::domain_error("convergence_report: model must be long-range");
  if (n_list.size() < 2)
    throw std::invalid_argument("convergence_report: need at least two N");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw std::invalid_argument(
          "convergence_report: N values must be strictly increasing");

  // asymptotic prediction 2 gamma Psi from the limit kernel
  const LimitKernel kernel = limit_kernel(model);
  const Matrix psi =
      [&] {
        const Matrix w = w_matrix(basis, phi);
        const Matrix r = r_matrix_longrange(basis, phi, kernel);
        return psi_matrix(w, r);
      }();
  const Matrix target = 2.0 * gamma * psi;
  const double target_norm = target.norm();
  if (!(target_norm > 0.0))
    throw std::runtime_error("convergence_report: degenerate prediction");

  ConvergenceReport rep;
  for (std::int64_t n : n_list) {
    const FiniteDesign design =
        design_points_from_density(phi, static_cast<int>(n));
    const Matrix scaled =
        exact_lse_covariance(basis, design, model, gamma, true, n_cap);
    rep.n_values.push_back(n);
    rep.d_values.push_back(d_norm(model, n));
    rep.rel_errors.push_back((scaled - target).norm() / target_norm);
  }

  // least-squares slope of log error vs log(1/d_alpha(N))
  const int k = static_cast<int>(rep.n_values.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < k; ++i) {
    const double xi = -std::log(rep.d_values[i]);
    const double yi = std::log(std::max(rep.rel_errors[i], 1e-300));
    sx += xi;
    sy += yi;
    sxx += xi * xi;
    sxy += xi * yi;
  }
  rep.fitted_slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);

  rep.monotone_decreasing = true;
  for (int i = 1; i < k; ++i)
    if (!(rep.rel_errors[i] < rep.rel_errors[i - 1]))
      rep.monotone_decreasing = false;
  rep.halved = rep.rel_errors.back() <= 0.5 * rep.rel_errors.front();
  return rep;
}

void ConvergenceReport::write_csv(std::ostream& os) const {
  os << "N,d_alpha,rel_error\n";
  char buf[128];
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g\n",
                  static_cast<long long>(n_values[i]), d_values[i],
                  rel_errors[i]);
    os << buf;
  }
  std::snprintf(buf, sizeof buf, "slope,%.17g,\n", fitted_slope);
  os << buf;
}

void ConvergenceReport::write_csv_file(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  write_csv(os);
}

} // namespace lrd
