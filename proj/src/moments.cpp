#include "lrdesign/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace lrd {
namespace {

Matrix weighted_outer_sum(const BasisSet& basis, const Grid& grid,
                          const std::function<double(int)>& node_weight) {
  const int p = basis.size();
  Matrix m = Matrix::Zero(p, p);
  for (int k = 0; k < grid.size(); ++k) {
    const double w = node_weight(k);
    if (w == 0.0) continue;
    const double t = grid.node(k);
    for (int i = 0; i < p; ++i) {
      const double fi = basis.eval(i, t);
      for (int j = i; j < p; ++j) m(i, j) += w * fi * basis.eval(j, t);
    }
  }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < i; ++j) m(i, j) = m(j, i);
  return m;
}

void check_conditioning(const Matrix& w) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(w);
  const auto& ev = es.eigenvalues();
  if (!(ev(0) > 0.0) || ev(ev.size() - 1) / ev(0) > 1e12)
    throw std::runtime_error("w_matrix: numerically rank-deficient");
}

} // namespace

ModelContext ModelContext::long_range(const LimitKernel& k) {
  k.validate();
  ModelContext ctx;
  ctx.kind = Kind::LongRange;
  ctx.kernel = k;
  return ctx;
}

ModelContext ModelContext::short_range(double lambda, double gamma) {
  if (!(lambda > 0.0))
    throw std::domain_error("ModelContext: lambda must be > 0");
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw std::domain_error("ModelContext: gamma must be in (0, 1]");
  ModelContext ctx;
  ctx.kind = Kind::ShortRange;
  ctx.lambda = lambda;
  ctx.gamma = gamma;
  return ctx;
}

Matrix w_matrix(const BasisSet& basis, const DesignDensity& phi) {
  Matrix w = weighted_outer_sum(basis, phi.grid, [&](int k) {
    return phi.grid.weight(k) * phi.values[k];
  });
  check_conditioning(w);
  return w;
}

Matrix r_matrix_longrange(const BasisSet& basis, const DesignDensity& phi,
                          const LimitKernel& kernel) {
  kernel.validate();
  const double a = kernel.alpha;
  const double scale = a < 1.0 ? kernel.c / (1.0 - a) : kernel.c;
  const double expo = 1.0 + a;
  return weighted_outer_sum(basis, phi.grid, [&](int k) {
    return scale * phi.grid.weight(k) * std::pow(phi.values[k], expo);
  });
}

Matrix r_matrix_shortrange(const BasisSet& basis, const DesignDensity& phi,
                           double lambda, double gamma) {
  ShortRangeKernel q{lambda};
  q.validate();
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw std::domain_error("r_matrix_shortrange: gamma must be in (0, 1]");
  return weighted_outer_sum(basis, phi.grid, [&](int k) {
    const double v = phi.values[k];
    const double qterm = v > 0.0 ? q.q(1.0 / v) * v : 0.0;
    return phi.grid.weight(k) * (v + 2.0 * gamma * qterm);
  });
}

Matrix psi_matrix(const Matrix& w, const Matrix& r) {
  Eigen::LDLT<Matrix> ldlt(w);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
    throw std::runtime_error("psi_matrix: W is not positive definite");
  const Matrix wr = ldlt.solve(r);
  Matrix psi = ldlt.solve(wr.transpose()).transpose();
  return 0.5 * (psi + psi.transpose());
}

double criterion_eval(Criterion crit, const Matrix& psi) {
  const int p = static_cast<int>(psi.rows());
  switch (crit) {
    case Criterion::D:
      return std::pow(psi.determinant(), 1.0 / p);
    case Criterion::Single:
      if (p != 1)
        throw std::invalid_argument("Single criterion requires p = 1");
      return psi(0, 0);
    case Criterion::Slope:
      if (p != 2)
        throw std::invalid_argument("Slope criterion requires p = 2");
      return psi(1, 1);
  }
  throw std::logic_error("criterion_eval: unreachable");
}

double criterion_value(Criterion crit, const BasisSet& basis,
                       const DesignDensity& phi, const ModelContext& ctx) {
  const Matrix w = w_matrix(basis, phi);
  const Matrix r = ctx.kind == ModelContext::Kind::LongRange
                       ? r_matrix_longrange(basis, phi, ctx.kernel)
                       : r_matrix_shortrange(basis, phi, ctx.lambda, ctx.gamma);
  return criterion_eval(crit, psi_matrix(w, r));
}

double efficiency(const DesignDensity& candidate,
                  const DesignDensity& reference, Criterion crit,
                  const BasisSet& basis, const ModelContext& ctx) {
  const double cv = criterion_value(crit, basis, candidate, ctx);
  if (!(cv > 0.0) || !std::isfinite(cv))
    throw std::runtime_error("efficiency: degenerate candidate criterion");
  return criterion_value(crit, basis, reference, ctx) / cv;
}

} // namespace lrd
