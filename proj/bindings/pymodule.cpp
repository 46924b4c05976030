#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lrdesign/optimizer.hpp"
#include "lrdesign/shortrange.hpp"
#include "lrdesign/special.hpp"
#include "lrdesign/tables.hpp"
#include "lrdesign/verify.hpp"

namespace py = pybind11;
using namespace lrd;

PYBIND11_MODULE(_lrdesign, m) {
  m.doc() = "Asymptotic optimal designs for regression with long-range "
            "dependent errors";

  m.def("mittag_leffler", &mittag_leffler, py::arg("nu"), py::arg("beta"),
        py::arg("t"));

  py::enum_<Family>(m, "Family")
      .value("Cauchy", Family::Cauchy)
      .value("MittagLeffler", Family::MittagLeffler)
      .value("Svf", Family::Svf)
      .value("Exponential", Family::Exponential);

  py::class_<CorrelationModel>(m, "CorrelationModel")
      .def_static("cauchy", &CorrelationModel::cauchy, py::arg("alpha"),
                  py::arg("beta"))
      .def_static("mittag_leffler", &CorrelationModel::mittag_leffler,
                  py::arg("alpha"), py::arg("nu"), py::arg("beta"))
      .def_static("svf", [](double alpha) {
        return CorrelationModel::svf_family(alpha);
      }, py::arg("alpha"))
      .def_static("exponential", &CorrelationModel::exponential,
                  py::arg("lambda_"))
      .def_readonly("family", &CorrelationModel::family)
      .def_readonly("alpha", &CorrelationModel::alpha)
      .def("long_range", &CorrelationModel::long_range);

  m.def("rho", &rho_eval, py::arg("model"), py::arg("t"));
  m.def("d_norm", &d_norm, py::arg("model"), py::arg("n"));
  m.def("q_partial_sum", &q_partial_sum, py::arg("model"), py::arg("t"),
        py::arg("n"));

  py::class_<LimitKernel>(m, "LimitKernel")
      .def(py::init([](double alpha, double c) {
        LimitKernel k{alpha, c};
        k.validate();
        return k;
      }), py::arg("alpha"), py::arg("c") = 1.0)
      .def_readonly("alpha", &LimitKernel::alpha)
      .def_readonly("c", &LimitKernel::c)
      .def("q", &LimitKernel::q)
      .def("h", &LimitKernel::h)
      .def("h_inv", &LimitKernel::h_inv);
  m.def("limit_kernel", &limit_kernel, py::arg("model"));

  py::class_<Grid>(m, "Grid")
      .def(py::init<double, int>(), py::arg("half_width"), py::arg("n"))
      .def_property_readonly("half_width", &Grid::half_width)
      .def("__len__", &Grid::size)
      .def("nodes", &Grid::nodes);

  py::class_<DesignDensity>(m, "DesignDensity")
      .def(py::init<Grid, std::vector<double>>(), py::arg("grid"),
           py::arg("values"))
      .def_static("uniform", &DesignDensity::uniform)
      .def_readonly("grid", &DesignDensity::grid)
      .def_readonly("values", &DesignDensity::values)
      .def("total", &DesignDensity::total)
      .def("write_csv", &DesignDensity::write_csv_file)
      .def_static("read_csv", &DesignDensity::read_csv_file);

  py::class_<BasisSet>(m, "BasisSet")
      .def_static("location", &BasisSet::location)
      .def_static("through_origin", &BasisSet::through_origin)
      .def_static("linear", &BasisSet::linear)
      .def_static("by_name", &BasisSet::by_name)
      .def_property_readonly("size", &BasisSet::size);

  py::enum_<Criterion>(m, "Criterion")
      .value("D", Criterion::D)
      .value("Single", Criterion::Single)
      .value("Slope", Criterion::Slope);

  py::class_<ModelContext>(m, "ModelContext")
      .def_static("long_range", &ModelContext::long_range)
      .def_static("short_range", &ModelContext::short_range,
                  py::arg("lambda_"), py::arg("gamma"));

  m.def("criterion_value", &criterion_value, py::arg("criterion"),
        py::arg("basis"), py::arg("density"), py::arg("context"));
  m.def("efficiency", &efficiency, py::arg("candidate"), py::arg("reference"),
        py::arg("criterion"), py::arg("basis"), py::arg("context"));

  py::class_<FixedPointSolution>(m, "FixedPointSolution")
      .def_readonly("mu", &FixedPointSolution::mu)
      .def_readonly("tau", &FixedPointSolution::tau)
      .def_readonly("density", &FixedPointSolution::density)
      .def_readonly("residual_norm", &FixedPointSolution::residual_norm)
      .def_readonly("iterations", &FixedPointSolution::iterations)
      .def_readonly("converged", &FixedPointSolution::converged)
      .def_readonly("support_edge", &FixedPointSolution::support_edge);

  m.def("solve_one_param",
        [](const BasisSet& basis, const LimitKernel& kernel, const Grid& grid) {
          return solve_one_param(basis, kernel, grid);
        },
        py::arg("basis"), py::arg("kernel"), py::arg("grid"));

  py::class_<ShortRangeContext>(m, "ShortRangeContext")
      .def(py::init([](double lambda, double gamma) {
        ShortRangeContext c{lambda, gamma};
        c.validate();
        return c;
      }), py::arg("lambda_"), py::arg("gamma"))
      .def_readonly("lambda_", &ShortRangeContext::lambda)
      .def_readonly("gamma", &ShortRangeContext::gamma);

  m.def("solve_shortrange",
        [](const BasisSet& basis, const ShortRangeContext& ctx,
           const Grid& grid) { return solve_shortrange(basis, ctx, grid); },
        py::arg("basis"), py::arg("context"), py::arg("grid"));

  py::class_<OptimizerOptions>(m, "OptimizerOptions")
      .def(py::init<>())
      .def_readwrite("max_iter", &OptimizerOptions::max_iter)
      .def_readwrite("tol_stationarity", &OptimizerOptions::tol_stationarity)
      .def_readwrite("symmetric", &OptimizerOptions::symmetric)
      .def_readwrite("restarts", &OptimizerOptions::restarts)
      .def_readwrite("seed", &OptimizerOptions::seed);

  py::class_<OptimizeResult>(m, "OptimizeResult")
      .def_readonly("density", &OptimizeResult::density)
      .def_readonly("criterion", &OptimizeResult::criterion)
      .def_readonly("stationarity", &OptimizeResult::stationarity)
      .def_readonly("iterations", &OptimizeResult::iterations)
      .def_readonly("converged", &OptimizeResult::converged);

  m.def("optimize_density", &optimize_density, py::arg("basis"),
        py::arg("criterion"), py::arg("context"), py::arg("grid"),
        py::arg("options") = OptimizerOptions{});

  py::class_<MaximinResult>(m, "MaximinResult")
      .def_readonly("density", &MaximinResult::density)
      .def_readonly("profile", &MaximinResult::profile)
      .def_readonly("min_efficiency", &MaximinResult::min_efficiency);

  m.def("maximin_design",
        [](const std::vector<double>& alphas, const Grid& grid,
           const OptimizerOptions& opts) {
          MaximinProblem problem;
          problem.alphas = alphas;
          problem.basis = BasisSet::through_origin();
          return maximin_design(problem, grid, opts);
        },
        py::arg("alphas"), py::arg("grid"),
        py::arg("options") = OptimizerOptions{});

  py::class_<FiniteDesign>(m, "FiniteDesign")
      .def_readonly("points", &FiniteDesign::points);
  m.def("design_points_from_density", &design_points_from_density,
        py::arg("density"), py::arg("n"));
  m.def("exact_lse_covariance", &exact_lse_covariance, py::arg("basis"),
        py::arg("design"), py::arg("model"), py::arg("gamma"),
        py::arg("long_range_scaling") = false, py::arg("n_cap") = 5000);

  py::class_<ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("n_values", &ConvergenceReport::n_values)
      .def_readonly("rel_errors", &ConvergenceReport::rel_errors)
      .def_readonly("fitted_slope", &ConvergenceReport::fitted_slope)
      .def_readonly("monotone_decreasing",
                    &ConvergenceReport::monotone_decreasing);
  m.def("convergence_report",
        [](const BasisSet& basis, const DesignDensity& phi,
           const CorrelationModel& model, double gamma,
           const std::vector<std::int64_t>& ns) {
          return convergence_report(basis, phi, model, gamma, ns);
        },
        py::arg("basis"), py::arg("density"), py::arg("model"),
        py::arg("gamma"), py::arg("n_list"));
}
