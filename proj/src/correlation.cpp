#include "lrdesign/correlation.hpp"

#include <cmath>
#include <stdexcept>

#include "lrdesign/special.hpp"

namespace lrd {

CorrelationModel CorrelationModel::cauchy(double alpha, double beta) {
  CorrelationModel m;
  m.family = Family::Cauchy;
  m.alpha = alpha;
  m.beta = beta;
  m.validate();
  return m;
}

CorrelationModel CorrelationModel::mittag_leffler(double alpha, double nu,
                                                  double beta) {
  CorrelationModel m;
  m.family = Family::MittagLeffler;
  m.alpha = alpha;
  m.nu = nu;
  m.beta = beta;
  m.validate();
  return m;
}

CorrelationModel CorrelationModel::svf_family(double alpha,
                                              std::function<double(double)> L) {
  CorrelationModel m;
  m.family = Family::Svf;
  m.alpha = alpha;
  m.svf = std::move(L);
  m.validate();
  return m;
}

CorrelationModel CorrelationModel::exponential(double lambda) {
  CorrelationModel m;
  m.family = Family::Exponential;
  m.lambda = lambda;
  m.validate();
  return m;
}

void CorrelationModel::validate() const {
  switch (family) {
    case Family::Cauchy:
      if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error("Cauchy family: alpha must be in (0, 1]");
      if (!(beta > 0.0))
        throw std::domain_error("Cauchy family: beta must be > 0");
      break;
    case Family::MittagLeffler:
      if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error("Mittag-Leffler family: alpha must be in (0, 1]");
      if (!(nu > 0.0 && nu <= 1.0))
        throw std::domain_error("Mittag-Leffler family: nu must be in (0, 1]");
      if (!(beta >= nu))
        throw std::domain_error("Mittag-Leffler family: beta must be >= nu");
      if (nu == 1.0 && beta == 1.0)
        throw std::domain_error(
            "Mittag-Leffler family: (nu, beta) = (1, 1) is short-range; use "
            "the exponential family");
      break;
    case Family::Svf:
      if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error("SVF family: alpha must be in (0, 1]");
      break;
    case Family::Exponential:
      if (!(lambda > 0.0))
        throw std::domain_error("Exponential family: lambda must be > 0");
      break;
  }
}

double rho_eval(const CorrelationModel& model, double t) {
  model.validate();
  const double u = std::fabs(t);
  switch (model.family) {
    case Family::Cauchy:
      return std::pow(1.0 + std::pow(u, model.beta), -model.alpha / model.beta);
    case Family::MittagLeffler:
      return mittag_leffler(model.nu, model.beta, std::pow(u, model.alpha));
    case Family::Svf: {
      // the family only pins down the tail; continue toward 0 by clipping
      // the same expression at the exact value rho(0) = 1
      if (u == 0.0) return 1.0;
      const double L = model.svf ? model.svf(u) : 1.0;
      return std::min(1.0, L / std::pow(u, model.alpha));
    }
    case Family::Exponential:
      return std::exp(-model.lambda * u);
  }
  throw std::logic_error("rho_eval: unreachable");
}

double d_norm(const CorrelationModel& model, std::int64_t n) {
  model.validate();
  if (n < 1) throw std::domain_error("d_norm: N must be >= 1");
  if (!model.long_range())
    throw std::domain_error("d_norm: short-range models have no long-range "
                            "normalizer");
  const double nd = static_cast<double>(n);
  double d = model.alpha < 1.0 ? std::pow(nd, 1.0 - model.alpha) : std::log(nd);
  if (model.family == Family::Svf && model.svf) d *= model.svf(nd);
  return d;
}

} // namespace lrd
