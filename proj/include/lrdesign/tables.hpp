#ifndef LRDESIGN_TABLES_HPP
#define LRDESIGN_TABLES_HPP

#include <array>

#include "lrdesign/optimizer.hpp"
#include "lrdesign/shortrange.hpp"

namespace lrd {

/// Reproductions of the published reference tables for the regression
/// through the origin, f(t) = t, T = 1. Each compute_* function solves on
/// the given grid; the *_reference() functions return the published values.

struct Table1Row {
  double alpha, mu, tau, edge, eff_uniform;
};

struct Table3Row {
  double lambda, gamma, mu, tau, edge, eff_uniform;
};

/// Efficiency grids: table 4 rows are (lambda, gamma) pairs, columns the
/// alpha values; table 5 is transposed (rows alpha, columns (lambda, gamma)).
using Table45 = std::array<std::array<double, 5>, 5>;

inline constexpr std::array<double, 5> kTableAlphas{0.05, 0.25, 0.5, 0.75,
                                                    0.95};
inline constexpr std::array<std::array<double, 2>, 5> kTableSrParams{
    {{0.5, 0.5}, {0.5, 0.1}, {0.5, 0.9}, {0.1, 0.5}, {2.5, 0.5}}};

std::array<Table1Row, 5> compute_table1(const Grid& grid);
std::array<Table1Row, 5> table1_reference();

std::array<double, 9> compute_table2(const Grid& grid);
std::array<double, 9> table2_reference();

std::array<Table3Row, 5> compute_table3(const Grid& grid);
std::array<Table3Row, 5> table3_reference();

Table45 compute_table4(const Grid& grid);
Table45 table4_reference();

Table45 compute_table5(const Grid& grid);
Table45 table5_reference();

/// Published closed-form approximation of the standardized maximin optimal
/// density, (5.7275 t^2 - 1.16963 - 3.0264 t^4)_+, renormalized on the grid.
DesignDensity maximin_reference_density(const Grid& grid);

} // namespace lrd

#endif
