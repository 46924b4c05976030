#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

namespace fs = std::filesystem;

namespace {

std::string cli() {
  const char* p = std::getenv("LRD_CLI");
  REQUIRE_MESSAGE(p != nullptr, "LRD_CLI must point at the binary");
  return p;
}

int run(const std::string& args, const std::string& log = "/dev/null") {
  const std::string cmd = cli() + " " + args + " >" + log + " 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("lrd_cli_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static inline int counter = 0;
};

} // namespace

TEST_CASE("density command writes files and converges") {
  TempDir tmp;
  const int rc = run("--out " + tmp.path.string() +
                     " --grid-n 801 density --family svf --alpha 0.5");
  CHECK(rc == 0);
  CHECK(fs::exists(tmp.path / "density.csv"));
  const std::string sol = slurp(tmp.path / "solution.csv");
  CHECK(sol.rfind("mu,tau,edge,residual", 0) == 0);
  CHECK(sol.find("4.31") != std::string::npos);
}

TEST_CASE("density output is deterministic") {
  TempDir a, b;
  const std::string args = " --grid-n 401 density --family cauchy --alpha 0.25";
  CHECK(run("--out " + a.path.string() + args) == 0);
  CHECK(run("--out " + b.path.string() + args) == 0);
  CHECK(slurp(a.path / "density.csv") == slurp(b.path / "density.csv"));
}

TEST_CASE("table command checks against the published values") {
  TempDir tmp;
  CHECK(run("--out " + tmp.path.string() + " --grid-n 801 table --id 1") == 0);
  CHECK(fs::exists(tmp.path / "table1.csv"));
  CHECK(fs::exists(tmp.path / "table1_diff.csv"));
  CHECK(run("--out " + tmp.path.string() + " --grid-n 801 table --id 2") == 0);
}

TEST_CASE("verify command reports decreasing errors") {
  TempDir tmp;
  const int rc = run("--out " + tmp.path.string() +
                     " --grid-n 201 verify --family cauchy --alpha 0.5 "
                     "--gamma 1 --N 100,400,1600");
  CHECK(rc == 0);
  const std::string rep = slurp(tmp.path / "report.csv");
  CHECK(rep.rfind("N,d_alpha,rel_error", 0) == 0);
}

TEST_CASE("scalar commands print known values") {
  TempDir tmp;
  const auto log = (tmp.path / "out.txt").string();
  CHECK(run("mlf --nu 1 --beta 1 --t 2", log) == 0);
  CHECK(slurp(log).rfind("0.13533528", 0) == 0);
  CHECK(run("rho --family cauchy --alpha 0.5 --beta 1 --t 3", log) == 0);
  CHECK(slurp(log).rfind("0.5", 0) == 0);
}

TEST_CASE("efficiency command") {
  TempDir tmp;
  const auto log = (tmp.path / "out.txt").string();
  CHECK(run("--grid-n 801 efficiency --family svf --alpha 0.5", log) == 0);
  // uniform design efficiency at alpha = 0.5 is about 0.78
  CHECK(slurp(log).find("efficiency=0.78") != std::string::npos);
}

TEST_CASE("config file drives a run and unknown keys fail") {
  TempDir tmp;
  {
    std::ofstream cfg(tmp.path / "run.ini");
    cfg << "grid-n=401\n[density]\nfamily=svf\nalpha=0.5\n";
  }
  CHECK(run("--out " + tmp.path.string() + " --config " +
            (tmp.path / "run.ini").string() + " density") == 0);
  {
    std::ofstream cfg(tmp.path / "bad.ini");
    cfg << "grid-n=401\nbogus_key=1\n[density]\nfamily=svf\n";
  }
  CHECK(run("--out " + tmp.path.string() + " --config " +
            (tmp.path / "bad.ini").string() + " density") != 0);
}

TEST_CASE("error exit codes") {
  CHECK(run("density --family nosuch") == 1);
  CHECK(run("verify --family exponential --lambda 1") == 1);
  CHECK(run("mlf --nu 2 --beta 1 --t 1") == 1);
  CHECK(run("") == 1); // subcommand required
}
