// lrdesign: asymptotic optimal designs for regression with dependent errors.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lrdesign/optimizer.hpp"
#include "lrdesign/shortrange.hpp"
#include "lrdesign/special.hpp"
#include "lrdesign/tables.hpp"
#include "lrdesign/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNoConverge = 2;
constexpr int kExitMismatch = 3;

struct ModelFlags {
  std::string family = "cauchy";
  double alpha = 0.5;
  double beta = 1.0;
  double nu = 0.5;
  double lambda = 1.0;
  double gamma = 1.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "cauchy | ml | svf | exponential")
        ->check(CLI::IsMember({"cauchy", "ml", "svf", "exponential"}));
    cmd->add_option("--alpha", alpha, "long-range decay exponent in (0, 1]");
    cmd->add_option("--beta", beta, "Cauchy / Mittag-Leffler shape");
    cmd->add_option("--nu", nu, "first Mittag-Leffler order");
    cmd->add_option("--lambda", lambda, "exponential rate");
    cmd->add_option("--gamma", gamma, "correlated-noise weight in (0, 1]");
  }

  lrd::CorrelationModel build() const {
    if (family == "cauchy") return lrd::CorrelationModel::cauchy(alpha, beta);
    if (family == "ml")
      return lrd::CorrelationModel::mittag_leffler(alpha, nu, beta);
    if (family == "svf") return lrd::CorrelationModel::svf_family(alpha);
    return lrd::CorrelationModel::exponential(lambda);
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::filesystem::path& dir,
                       const std::string& name) {
  std::filesystem::create_directories(dir);
  std::ofstream os(dir / name);
  if (!os) throw std::runtime_error("cannot open " + (dir / name).string());
  return os;
}

std::vector<double> parse_alphas(const std::string& s) {
  // "a:b:step" range or comma-separated list
  std::vector<double> out;
  const auto colon = s.find(':');
  if (colon != std::string::npos) {
    double a = 0.0, b = 0.0, step = 0.0;
    if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &a, &b, &step) != 3 ||
        !(step > 0.0) || b < a)
      throw std::invalid_argument("bad --alphas range: " + s);
    for (double v = a; v <= b + 1e-12; v += step) out.push_back(v);
    return out;
  }
  std::string tok;
  for (std::istringstream is(s); std::getline(is, tok, ',');)
    out.push_back(std::stod(tok));
  if (out.empty()) throw std::invalid_argument("empty --alphas list");
  return out;
}

int run_density(const ModelFlags& model, const std::string& basis_name,
                double half_width, int grid_n, double tol,
                const std::string& out_dir) {
  const lrd::BasisSet basis = lrd::BasisSet::by_name(basis_name);
  if (basis.size() != 1)
    throw std::invalid_argument("density: basis must have one function "
                                "(location or through_origin)");
  const lrd::Grid grid(half_width, grid_n);
  const lrd::CorrelationModel m = model.build();
  lrd::SolveOptions opts;
  opts.tol = tol;

  lrd::FixedPointSolution sol =
      m.long_range()
          ? lrd::solve_one_param(basis, lrd::limit_kernel(m), grid, opts)
          : lrd::solve_shortrange(
                basis, lrd::ShortRangeContext{model.lambda, model.gamma}, grid,
                opts);

  sol.density.write_csv_file(out_dir + "/density.csv");
  auto os = open_out(out_dir, "solution.csv");
  os << "mu,tau,edge,residual\n"
     << fmt(sol.mu) << ',' << fmt(sol.tau) << ',' << fmt(sol.support_edge)
     << ',' << fmt(sol.residual_norm) << '\n';
  if (!sol.converged) {
    std::cerr << "solver did not converge (residual " << sol.residual_norm
              << "); best iterate written\n";
    return kExitNoConverge;
  }
  std::cout << "mu=" << fmt(sol.mu) << " tau=" << fmt(sol.tau)
            << " edge=" << fmt(sol.support_edge) << '\n';
  return kExitOk;
}

int run_table(int id, int grid_n, const std::string& out_dir) {
  const lrd::Grid grid(1.0, grid_n);
  bool ok = true;
  auto os = open_out(out_dir, "table" + std::to_string(id) + ".csv");
  auto diff = open_out(out_dir, "table" + std::to_string(id) + "_diff.csv");

  auto cell = [&](double got, double want, double tol) {
    diff << fmt(std::fabs(got - want));
    if (std::fabs(got - want) > tol) ok = false;
  };

  switch (id) {
    case 1: {
      const auto got = lrd::compute_table1(grid);
      const auto want = lrd::table1_reference();
      os << "alpha,mu,tau,edge,eff_uniform\n";
      diff << "alpha,d_mu,d_tau,d_edge,d_eff\n";
      for (int i = 0; i < 5; ++i) {
        os << fmt(got[i].alpha) << ',' << fmt(got[i].mu) << ','
           << fmt(got[i].tau) << ',' << fmt(got[i].edge) << ','
           << fmt(got[i].eff_uniform) << '\n';
        diff << fmt(got[i].alpha) << ',';
        cell(got[i].mu, want[i].mu, want[i].alpha > 0.9 ? 0.3 : 0.05);
        diff << ',';
        cell(got[i].tau, want[i].tau, 0.02);
        diff << ',';
        cell(got[i].edge, want[i].edge, 0.01);
        diff << ',';
        cell(got[i].eff_uniform, want[i].eff_uniform, 0.01);
        diff << '\n';
      }
      break;
    }
    case 2: {
      const auto got = lrd::compute_table2(grid);
      const auto want = lrd::table2_reference();
      os << "alpha,eff\n";
      diff << "alpha,d_eff\n";
      for (int i = 0; i < 9; ++i) {
        os << fmt(0.1 * (i + 1)) << ',' << fmt(got[i]) << '\n';
        diff << fmt(0.1 * (i + 1)) << ',';
        cell(got[i], want[i], 0.02);
        diff << '\n';
      }
      break;
    }
    case 3: {
      const auto got = lrd::compute_table3(grid);
      const auto want = lrd::table3_reference();
      os << "lambda,gamma,mu,tau,edge,eff_uniform\n";
      diff << "lambda,gamma,d_mu,d_tau,d_edge,d_eff\n";
      for (int i = 0; i < 5; ++i) {
        os << fmt(got[i].lambda) << ',' << fmt(got[i].gamma) << ','
           << fmt(got[i].mu) << ',' << fmt(got[i].tau) << ','
           << fmt(got[i].edge) << ',' << fmt(got[i].eff_uniform) << '\n';
        diff << fmt(got[i].lambda) << ',' << fmt(got[i].gamma) << ',';
        cell(got[i].mu, want[i].mu, 0.05);
        diff << ',';
        cell(got[i].tau, want[i].tau, 0.02);
        diff << ',';
        cell(got[i].edge, want[i].edge, 0.01);
        diff << ',';
        cell(got[i].eff_uniform, want[i].eff_uniform, 0.01);
        diff << '\n';
      }
      break;
    }
    case 4:
    case 5: {
      const auto got = id == 4 ? lrd::compute_table4(grid)
                               : lrd::compute_table5(grid);
      const auto want = id == 4 ? lrd::table4_reference()
                                : lrd::table5_reference();
      os << "row,c1,c2,c3,c4,c5\n";
      diff << "row,c1,c2,c3,c4,c5\n";
      for (int r = 0; r < 5; ++r) {
        os << r + 1;
        diff << r + 1;
        for (int c = 0; c < 5; ++c) {
          os << ',' << fmt(got[r][c]);
          diff << ',';
          cell(got[r][c], want[r][c], 0.02);
        }
        os << '\n';
        diff << '\n';
      }
      break;
    }
    default:
      throw std::invalid_argument("table id must be 1..5");
  }
  std::cout << "table " << id << (ok ? " matches" : " MISMATCH") << '\n';
  return ok ? kExitOk : kExitMismatch;
}

int run_verify(const ModelFlags& model, const std::string& basis_name,
               double half_width, int grid_n, const std::string& n_list,
               const std::string& out_dir) {
  const lrd::CorrelationModel m = model.build();
  if (!m.long_range())
    throw std::invalid_argument("verify: model must be long-range");
  if (model.gamma == 0.0)
    throw std::invalid_argument(
        "verify: gamma = 0 is degenerate white noise; the scaled "
        "covariance vanishes and no comparison is possible");
  std::vector<std::int64_t> ns;
  std::string tok;
  for (std::istringstream is(n_list); std::getline(is, tok, ',');)
    ns.push_back(std::stoll(tok));

  const lrd::Grid grid(half_width, grid_n);
  const lrd::BasisSet basis = lrd::BasisSet::by_name(basis_name);
  const auto rep = lrd::convergence_report(
      basis, lrd::DesignDensity::uniform(grid), m, model.gamma, ns);
  rep.write_csv_file(out_dir + "/report.csv");
  for (std::size_t i = 0; i < rep.n_values.size(); ++i)
    std::cout << "N=" << rep.n_values[i]
              << " rel_error=" << fmt(rep.rel_errors[i]) << '\n';
  std::cout << "slope=" << fmt(rep.fitted_slope) << '\n';
  return rep.monotone_decreasing ? kExitOk : kExitMismatch;
}

int run_maximin(const std::string& alphas, int grid_n, int max_iter,
                const std::string& out_dir) {
  lrd::MaximinProblem problem;
  problem.alphas = parse_alphas(alphas);
  problem.basis = lrd::BasisSet::through_origin();
  lrd::OptimizerOptions opts;
  opts.max_iter = max_iter;
  const auto res = lrd::maximin_design(problem, lrd::Grid(1.0, grid_n), opts);
  res.density.write_csv_file(out_dir + "/density.csv");
  auto os = open_out(out_dir, "profile.csv");
  os << "alpha,eff\n";
  for (std::size_t i = 0; i < problem.alphas.size(); ++i)
    os << fmt(problem.alphas[i]) << ',' << fmt(res.profile[i]) << '\n';
  std::cout << "min_efficiency=" << fmt(res.min_efficiency) << '\n';
  return kExitOk;
}

int run_efficiency(const ModelFlags& model, const std::string& basis_name,
                   const std::string& density_path, double half_width,
                   int grid_n) {
  const lrd::Grid grid(half_width, grid_n);
  const lrd::BasisSet basis = lrd::BasisSet::by_name(basis_name);
  const lrd::DesignDensity cand =
      density_path.empty() ? lrd::DesignDensity::uniform(grid)
                           : lrd::DesignDensity::read_csv_file(density_path);
  const lrd::CorrelationModel m = model.build();
  double eff;
  if (m.long_range()) {
    eff = lrd::cross_efficiency_lr_of_sr(cand, basis, lrd::limit_kernel(m));
  } else {
    eff = lrd::cross_efficiency_sr_of_lr(
        cand, basis, lrd::ShortRangeContext{model.lambda, model.gamma});
  }
  std::cout << "efficiency=" << fmt(eff) << '\n';
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymptotic optimal designs for regression with "
               "long-range dependent errors"};
  app.set_config("--config", "", "flat key=value config file; flags win");
  app.allow_config_extras(false);
  app.require_subcommand(1);

  std::string out_dir = ".";
  int grid_n = 2001;
  double half_width = 1.0;
  double tol = 1e-8;
  unsigned seed = 0;
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--grid-n", grid_n, "grid size (odd)")->capture_default_str();
  app.add_option("-T,--half-width", half_width, "design interval half-width")
      ->capture_default_str();
  app.add_option("--tol", tol, "solver tolerance")->capture_default_str();
  app.add_option("--seed", seed, "optimizer restart seed");

  ModelFlags model;
  std::string basis_name = "through_origin";

  auto* density = app.add_subcommand("density", "solve an optimal density");
  model.attach(density);
  density->add_option("--basis", basis_name,
                      "location | through_origin | linear");

  auto* table = app.add_subcommand("table", "reproduce a reference table");
  int table_id = 1;
  table->add_option("--id", table_id, "table number 1..5")->required();

  auto* verify = app.add_subcommand("verify", "finite-N covariance check");
  ModelFlags vmodel;
  vmodel.attach(verify);
  std::string vbasis = "location", n_list = "200,800,3200";
  verify->add_option("--basis", vbasis, "basis name");
  verify->add_option("--N", n_list, "comma-separated design sizes");

  auto* mlf = app.add_subcommand("mlf", "evaluate the Mittag-Leffler function");
  double mnu = 1.0, mbeta = 1.0, mt = 0.0;
  mlf->add_option("--nu", mnu)->required();
  mlf->add_option("--beta", mbeta)->required();
  mlf->add_option("--t", mt)->required();

  auto* rho = app.add_subcommand("rho", "evaluate a correlation function");
  ModelFlags rmodel;
  rmodel.attach(rho);
  double rt = 0.0;
  rho->add_option("--t", rt)->required();

  auto* maximin = app.add_subcommand("maximin", "standardized maximin design");
  std::string alphas = "0.1:0.9:0.1";
  int mm_iter = 6000;
  maximin->add_option("--alphas", alphas, "a:b:step range or comma list");
  maximin->add_option("--max-iter", mm_iter)->capture_default_str();

  auto* eff = app.add_subcommand("efficiency",
                                 "efficiency of a density for a model");
  ModelFlags emodel;
  emodel.attach(eff);
  std::string ebasis = "through_origin", density_path;
  eff->add_option("--basis", ebasis, "basis name");
  eff->add_option("--density", density_path,
                  "candidate density CSV (default: uniform)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*density)
      return run_density(model, basis_name, half_width, grid_n, tol, out_dir);
    if (*table) return run_table(table_id, grid_n, out_dir);
    if (*verify)
      return run_verify(vmodel, vbasis, half_width, grid_n, n_list, out_dir);
    if (*mlf) {
      std::cout << fmt(lrd::mittag_leffler(mnu, mbeta, mt)) << '\n';
      return kExitOk;
    }
    if (*rho) {
      std::cout << fmt(lrd::rho_eval(rmodel.build(), rt)) << '\n';
      return kExitOk;
    }
    if (*maximin) return run_maximin(alphas, grid_n, mm_iter, out_dir);
    if (*eff)
      return run_efficiency(emodel, ebasis, density_path, half_width, grid_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
