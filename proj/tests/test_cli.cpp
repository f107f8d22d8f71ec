// End-to-end tests driving the installed CLI binary as a subprocess.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / "poki_cli_test";
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const TempDir& dir, const std::string& args) {
  const fs::path log = dir.path / "last_run.log";
  const std::string cmd =
      std::string(POKI_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult result;
#if defined(_WIN32)
  result.exit_code = status;
#else
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
  std::ifstream in(log);
  std::stringstream buf;
  buf << in.rdbuf();
  result.out = buf.str();
  return result;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("gen writes a deterministic dataset csv") {
  TempDir dir;
  const fs::path a = dir.path / "a.csv", b = dir.path / "b.csv";
  auto r = run_cli(dir, "gen --generator periodic --n 20 --seed 7 --out " + a.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("20 rows") != std::string::npos);
  REQUIRE(fs::exists(a));

  // 1 header + 20 data rows
  std::ifstream in(a);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) ++lines;
  }
  CHECK(lines == 21);

  r = run_cli(dir, "gen --generator periodic --n 20 --seed 7 --out " + b.string());
  CHECK(r.exit_code == 0);
  CHECK(read_file(a) == read_file(b));

  r = run_cli(dir, "gen --generator artificial --d 2 --n 0 --seed 1 --out " +
                       (dir.path / "bad.csv").string());
  CHECK(r.exit_code != 0);
}

TEST_CASE("usage errors exit with code 2") {
  TempDir dir;
  CHECK(run_cli(dir, "frobnicate").exit_code == 2);
  CHECK(run_cli(dir, "fit --method lacki --data /nonexistent.csv").exit_code == 2);
  CHECK(run_cli(dir, "experiment --config /nonexistent.json").exit_code == 2);
}

TEST_CASE("fit lacki prints the lazy slope estimate") {
  TempDir dir;
  const fs::path data = dir.path / "two.csv";
  {
    std::ofstream out(data);
    out << "x1,y\n0,0\n1,2\n";
  }
  const auto r = run_cli(dir, "fit --method lacki --data " + data.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("method: lacki") != std::string::npos);
  CHECK(r.out.find("theta: 2") != std::string::npos);
}

TEST_CASE("fit lin on an exact line prints slope and intercept") {
  TempDir dir;
  const fs::path data = dir.path / "line.csv";
  {
    std::ofstream out(data);
    out << "x1,y\n0,1\n1,3\n2,5\n";
  }
  const auto r = run_cli(dir, "fit --method lin --data " + data.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("weights: 2") != std::string::npos);
  CHECK(r.out.find("intercept: 1") != std::string::npos);
}

TEST_CASE("fit, save, and predict round trip") {
  TempDir dir;
  const fs::path data = dir.path / "train.csv";
  const fs::path model = dir.path / "model.json";
  const fs::path queries = dir.path / "queries.csv";
  const fs::path preds = dir.path / "preds.csv";

  auto r = run_cli(dir, "gen --generator periodic --n 24 --seed 3 --out " + data.string());
  REQUIRE(r.exit_code == 0);

  r = run_cli(dir, "fit --method poki-lc --data " + data.string() + " --seed 1 --budget 300 " +
                       "--out " + model.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("optimiser: gap=") != std::string::npos);
  REQUIRE(fs::exists(model));

  {
    std::ofstream out(queries);
    out << "x1\n0.1\n0.5\n0.9\n";
  }
  r = run_cli(dir, "predict --model " + model.string() + " --data " + queries.string() +
                       " --out " + preds.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(preds);
  std::string header, row;
  REQUIRE(std::getline(in, header));
  CHECK(header == "prediction");
  int rows = 0;
  while (std::getline(in, row)) {
    if (!row.empty()) ++rows;
  }
  CHECK(rows == 3);

  // query file with a trailing output column is accepted too
  const fs::path labelled = dir.path / "labelled.csv";
  {
    std::ofstream out(labelled);
    out << "x1,y\n0.1,0\n0.5,0\n";
  }
  r = run_cli(dir, "predict --model " + model.string() + " --data " + labelled.string());
  CHECK(r.exit_code == 0);
}

TEST_CASE("experiment subcommand writes a report and prints a table") {
  TempDir dir;
  const fs::path cfg = dir.path / "exp.json";
  const fs::path report = dir.path / "report.csv";
  {
    std::ofstream out(cfg);
    out << R"({"name":"cli-demo",
               "dataset":{"generator":"periodic","n":16,
                          "noise":{"variant":"gaussian","param":0.25}},
               "test":{"kind":"true_function","n":200},
               "methods":[{"method":"lin"},{"method":"lacki"}],
               "seeds":[1,2]})";
  }
  const auto r = run_cli(dir, "experiment --config " + cfg.string() + " --out " +
                                  report.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("lacki") != std::string::npos);
  CHECK(r.out.find("err_mean") != std::string::npos);
  REQUIRE(fs::exists(report));
  CHECK(read_file(report).find("method,error_mean") == 0);
}

TEST_CASE("experiment with a failing method exits 1 but still reports") {
  TempDir dir;
  const fs::path cfg = dir.path / "exp.json";
  {
    std::ofstream out(cfg);
    // poki-periodic without a theta box cannot run
    out << R"({"dataset":{"generator":"periodic","n":12},
               "test":{"kind":"true_function","n":50},
               "methods":[{"method":"lacki"},{"method":"poki-periodic"}],
               "seeds":[1]})";
  }
  const auto r = run_cli(dir, "experiment --config " + cfg.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("FAILED") != std::string::npos);
  CHECK(r.out.find("lacki") != std::string::npos);
}

TEST_CASE("trace subcommand records the optimiser iterations") {
  TempDir dir;
  const fs::path data = dir.path / "train.csv";
  const fs::path trace = dir.path / "trace.csv";
  auto r = run_cli(dir, "gen --generator periodic --n 20 --seed 5 --out " + data.string());
  REQUIRE(r.exit_code == 0);
  r = run_cli(dir, "trace --method poki-lc --data " + data.string() + " --budget 200 --out " +
                       trace.string());
  CHECK(r.exit_code == 0);
  REQUIRE(fs::exists(trace));
  std::ifstream in(trace);
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header == "iteration,evals,incumbent,lower_bound,gap");
  std::string row;
  CHECK(std::getline(in, row));
}

TEST_CASE("fit output is idempotent for fixed seeds") {
  TempDir dir;
  const fs::path data = dir.path / "train.csv";
  run_cli(dir, "gen --generator pendulum --n 14 --seed 2 --out " + data.string());
  const fs::path m1 = dir.path / "m1.json", m2 = dir.path / "m2.json";
  const std::string fit_args =
      "fit --method poki-ard --data " + data.string() + " --seed 9 --budget 250 --out ";
  CHECK(run_cli(dir, fit_args + m1.string()).exit_code == 0);
  CHECK(run_cli(dir, fit_args + m2.string()).exit_code == 0);
  CHECK(read_file(m1) == read_file(m2));
}
