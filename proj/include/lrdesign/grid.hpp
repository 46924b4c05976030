#ifndef LRDESIGN_GRID_HPP
#define LRDESIGN_GRID_HPP

#include <span>
#include <vector>

namespace lrd {

/// Equally spaced symmetric grid on [-T, T] with an odd number of nodes,
/// so that 0 is always a node. Carries composite Simpson weights.
class Grid {
 public:
  Grid(double half_width, int n);

  double half_width() const { return half_width_; }
  int size() const { return n_; }
  double spacing() const { return 2.0 * half_width_ / (n_ - 1); }
  double node(int i) const { return -half_width_ + spacing() * i; }
  std::vector<double> nodes() const;

  /// Composite Simpson weight of node i (h/3 * {1, 4, 2, ..., 4, 1}).
  double weight(int i) const;

  /// Composite Simpson integral over [-T, T]; exact for cubics.
  double quadrature(std::span<const double> values) const;

  /// Same interval, spacing halved (n -> 2n - 1).
  Grid refined() const { return Grid(half_width_, 2 * n_ - 1); }

  bool operator==(const Grid& other) const {
    return half_width_ == other.half_width_ && n_ == other.n_;
  }

 private:
  double half_width_;
  int n_;
};

} // namespace lrd

#endif
