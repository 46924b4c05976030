#ifndef LRDESIGN_ROOTFIND_HPP
#define LRDESIGN_ROOTFIND_HPP

#include <array>
#include <functional>

namespace lrd {

using Vec2 = std::array<double, 2>;

struct Broyden2Result {
  Vec2 x{};
  Vec2 residual{};
  int iterations = 0;
  bool converged = false;
};

/// Damped Broyden iteration for a 2x2 root-finding problem. `valid` rejects
/// trial points outside the admissible region; the step is halved until the
/// trial is admissible and the residual norm does not grow by more than a
/// factor of two.
Broyden2Result broyden2(const std::function<Vec2(const Vec2&)>& f,
                        const Vec2& x0,
                        const std::function<bool(const Vec2&)>& valid,
                        double tol = 1e-8, int max_iter = 200);

} // namespace lrd

#endif
