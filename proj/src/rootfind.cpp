#include "lrdesign/rootfind.hpp"

#include <cmath>
#include <stdexcept>

namespace lrd {
namespace {

double norm(const Vec2& v) { return std::hypot(v[0], v[1]); }

bool finite(const Vec2& v) {
  return std::isfinite(v[0]) && std::isfinite(v[1]);
}

} // namespace

Broyden2Result broyden2(const std::function<Vec2(const Vec2&)>& f,
                        const Vec2& x0,
                        const std::function<bool(const Vec2&)>& valid,
                        double tol, int max_iter) {
  Broyden2Result out;
  if (!valid(x0)) throw std::invalid_argument("broyden2: invalid start");
  Vec2 x = x0;
  Vec2 r = f(x);

  // forward-difference Jacobian
  double jac[2][2];
  for (int j = 0; j < 2; ++j) {
    const double h = 1e-6 * std::max(1.0, std::fabs(x[j]));
    Vec2 xp = x;
    xp[j] += h;
    Vec2 rp = valid(xp) ? f(xp) : r;
    if (!valid(xp) || !finite(rp)) {
      xp[j] = x[j] - h;
      rp = f(xp);
      jac[0][j] = (r[0] - rp[0]) / h;
      jac[1][j] = (r[1] - rp[1]) / h;
    } else {
      jac[0][j] = (rp[0] - r[0]) / h;
      jac[1][j] = (rp[1] - r[1]) / h;
    }
  }

  for (out.iterations = 0; out.iterations < max_iter; ++out.iterations) {
    if (norm(r) <= tol) {
      out.converged = true;
      break;
    }
    const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
    Vec2 step;
    if (std::fabs(det) < 1e-300) {
      step = {-r[0], -r[1]}; // singular Jacobian, fall back to residual step
    } else {
      step = {-(jac[1][1] * r[0] - jac[0][1] * r[1]) / det,
              -(-jac[1][0] * r[0] + jac[0][0] * r[1]) / det};
    }
    double damp = 1.0;
    Vec2 xn, rn;
    bool ok = false;
    for (int k = 0; k < 40; ++k) {
      xn = {x[0] + damp * step[0], x[1] + damp * step[1]};
      if (valid(xn)) {
        rn = f(xn);
        if (finite(rn) && norm(rn) <= 2.0 * norm(r)) {
          ok = true;
          break;
        }
      }
      damp *= 0.5;
    }
    if (!ok) break;
    const Vec2 dx{xn[0] - x[0], xn[1] - x[1]};
    const Vec2 dr{rn[0] - r[0], rn[1] - r[1]};
    const double dx2 = dx[0] * dx[0] + dx[1] * dx[1];
    if (dx2 > 0.0) {
      // rank-one Broyden update J += (dr - J dx) dx^T / |dx|^2
      const Vec2 jd{jac[0][0] * dx[0] + jac[0][1] * dx[1],
                    jac[1][0] * dx[0] + jac[1][1] * dx[1]};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          jac[i][j] += (dr[i] - jd[i]) * dx[j] / dx2;
    }
    x = xn;
    r = rn;
  }
  out.x = x;
  out.residual = r;
  if (norm(r) <= tol) out.converged = true;
  return out;
}

} // namespace lrd
