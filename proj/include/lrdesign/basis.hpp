#ifndef LRDESIGN_BASIS_HPP
#define LRDESIGN_BASIS_HPP

#include <functional>
#include <string>
#include <vector>

namespace lrd {

enum class Symmetry { Even, Odd, None };

/// Regression functions f_1..f_p with per-function symmetry metadata.
struct BasisSet {
  std::vector<std::function<double(double)>> funcs;
  std::vector<Symmetry> symmetry;
  std::string name;

  int size() const { return static_cast<int>(funcs.size()); }
  double eval(int i, double t) const { return funcs[i](t); }

  /// True when every function is even or odd, so that symmetric densities
  /// give diagonal moment matrices.
  bool symmetric() const;

  static BasisSet location();        // {1}
  static BasisSet through_origin();  // {t}
  static BasisSet linear();          // {1, t}
  static BasisSet by_name(const std::string& name);
};

} // namespace lrd

#endif
