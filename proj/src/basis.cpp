#include "lrdesign/basis.hpp"

#include <stdexcept>

namespace lrd {

bool BasisSet::symmetric() const {
  for (Symmetry s : symmetry)
    if (s == Symmetry::None) return false;
  return true;
}

BasisSet BasisSet::location() {
  BasisSet b;
  b.funcs = {[](double) { return 1.0; }};
  b.symmetry = {Symmetry::Even};
  b.name = "location";
  return b;
}

BasisSet BasisSet::through_origin() {
  BasisSet b;
  b.funcs = {[](double t) { return t; }};
  b.symmetry = {Symmetry::Odd};
  b.name = "through_origin";
  return b;
}

BasisSet BasisSet::linear() {
  BasisSet b;
  b.funcs = {[](double) { return 1.0; }, [](double t) { return t; }};
  b.symmetry = {Symmetry::Even, Symmetry::Odd};
  b.name = "linear";
  return b;
}

BasisSet BasisSet::by_name(const std::string& name) {
  if (name == "location") return location();
  if (name == "through_origin") return through_origin();
  if (name == "linear") return linear();
  throw std::invalid_argument("unknown basis: " + name);
}

} // namespace lrd
