// Command-line front end for the poki shared library. Talks to the core
// exclusively through the C API in poki/poki.h.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "poki/poki.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMethodFailure = 1;
constexpr int kExitUsage = 2;

struct DatasetDeleter {
  void operator()(poki_dataset* d) const { poki_dataset_free(d); }
};
struct ModelDeleter {
  void operator()(poki_model* m) const { poki_model_free(m); }
};
using DatasetPtr = std::unique_ptr<poki_dataset, DatasetDeleter>;
using ModelPtr = std::unique_ptr<poki_model, ModelDeleter>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  poki_string_free(s);
  return out;
}

[[noreturn]] void die(const std::string& message, int code) {
  std::cerr << "error: " << message << '\n';
  std::exit(code);
}

void check(poki_status status, int exit_code) {
  if (status != POKI_OK) die(poki_last_error(), exit_code);
}

std::size_t csv_column_count(const std::string& path) {
  std::ifstream in(path);
  if (!in) die("cannot open " + path, kExitUsage);
  std::string line;
  if (!std::getline(in, line)) die("empty file: " + path, kExitUsage);
  return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
}

DatasetPtr load_dataset(const std::string& path, bool no_header) {
  const std::size_t cols = csv_column_count(path);
  if (cols < 2) die("dataset needs at least one input column and one output column", kExitUsage);
  std::vector<std::size_t> input_cols(cols - 1);
  for (std::size_t i = 0; i + 1 < cols; ++i) input_cols[i] = i;
  poki_dataset* raw = nullptr;
  check(poki_dataset_load_csv(path.c_str(), input_cols.data(), input_cols.size(), cols - 1,
                              no_header ? 0 : 1, &raw),
        kExitUsage);
  return DatasetPtr(raw);
}

struct FitOptions {
  std::string method;
  std::string data_path;
  std::string config_path;
  std::string trace_path;
  std::uint64_t seed = 0;
  int budget = 2000;
  double tol = 1e-3;
  double split_ratio = 0.5;
  double theta_min = -1.0;  // <0 means unset
  double theta_max = -1.0;
  bool no_header = false;
};

void add_fit_options(CLI::App* cmd, FitOptions& opt) {
  cmd->add_option("--method", opt.method, "lin | lacki | poki-lc | poki-ard | poki-periodic")
      ->required();
  cmd->add_option("--data", opt.data_path, "training dataset CSV")->required();
  cmd->add_option("--config", opt.config_path, "JSON config merged under the flags");
  cmd->add_option("--seed", opt.seed, "split seed for poki methods");
  cmd->add_option("--budget", opt.budget, "optimiser evaluation budget");
  cmd->add_option("--tol", opt.tol, "optimiser gap target");
  cmd->add_option("--split-ratio", opt.split_ratio, "conditioning share of the data");
  cmd->add_option("--theta-min", opt.theta_min, "parameter box lower bound (all axes)");
  cmd->add_option("--theta-max", opt.theta_max, "parameter box upper bound (all axes)");
  cmd->add_flag("--no-header", opt.no_header, "dataset CSV has no header row");
}

json build_fit_config(const FitOptions& opt) {
  json cfg;
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) die("cannot open config: " + opt.config_path, kExitUsage);
    try {
      in >> cfg;
    } catch (const std::exception& ex) {
      die(std::string("config parse failure: ") + ex.what(), kExitUsage);
    }
  }
  cfg["method"] = opt.method;
  if (!cfg.contains("seed")) cfg["seed"] = opt.seed;
  if (!cfg.contains("budget")) cfg["budget"] = opt.budget;
  if (!cfg.contains("tol")) cfg["tol"] = opt.tol;
  if (!cfg.contains("split_ratio")) cfg["split_ratio"] = opt.split_ratio;
  if (opt.theta_min >= 0.0 && opt.theta_max >= 0.0) {
    cfg["theta_box"] = {{"lo", {opt.theta_min}}, {"hi", {opt.theta_max}}};
  }
  if (!opt.trace_path.empty()) cfg["trace_path"] = opt.trace_path;
  return cfg;
}

ModelPtr run_fit(const FitOptions& opt) {
  DatasetPtr data = load_dataset(opt.data_path, opt.no_header);
  poki_model* raw = nullptr;
  check(poki_fit(data.get(), build_fit_config(opt).dump().c_str(), &raw), kExitMethodFailure);
  return ModelPtr(raw);
}

void print_fit_summary(const poki_model* model) {
  char* info_raw = nullptr;
  check(poki_model_info(model, &info_raw), kExitMethodFailure);
  const json info = json::parse(take_string(info_raw));
  std::cout << "method: " << info.at("method").get<std::string>() << '\n';
  if (info.contains("theta")) {
    std::cout << "theta:";
    for (double t : info["theta"]) std::cout << ' ' << t;
    std::cout << '\n';
  }
  if (info.contains("weights")) {
    std::cout << "weights:";
    for (double w : info["weights"]) std::cout << ' ' << w;
    std::cout << "\nintercept: " << info["intercept"].get<double>() << '\n';
  }
  if (info.contains("opt")) {
    const auto& o = info["opt"];
    std::cout << "optimiser: gap=" << o["gap"].get<double>()
              << " lower_bound=" << o["lower_bound"].get<double>()
              << " evals=" << o["evals"].get<int>()
              << " converged=" << (o["converged"].get<bool>() ? "yes" : "no") << '\n';
  }
}

int cmd_gen(const std::string& generator, std::size_t n, std::size_t dim, std::uint64_t seed,
            const std::string& noise, double noise_param, const std::string& out_path) {
  json spec{{"generator", generator}, {"n", n}, {"seed", seed}};
  if (generator == "artificial") spec["d"] = dim;
  if (noise != "none") spec["noise"] = {{"variant", noise}, {"param", noise_param}, {"seed", seed}};
  poki_dataset* raw = nullptr;
  check(poki_dataset_generate(spec.dump().c_str(), &raw), kExitUsage);
  DatasetPtr data(raw);
  check(poki_dataset_save_csv(data.get(), out_path.c_str()), kExitUsage);
  std::cout << poki_dataset_rows(data.get()) << " rows written to " << out_path << '\n';
  return kExitOk;
}

int cmd_predict(const std::string& model_path, const std::string& data_path, bool no_header,
                const std::string& out_path) {
  std::ifstream in(model_path);
  if (!in) die("cannot open model: " + model_path, kExitUsage);
  std::stringstream buf;
  buf << in.rdbuf();
  poki_model* raw = nullptr;
  check(poki_model_from_json(buf.str().c_str(), &raw), kExitUsage);
  ModelPtr model(raw);

  char* info_raw = nullptr;
  check(poki_model_info(model.get(), &info_raw), kExitUsage);
  const auto input_dim = json::parse(take_string(info_raw)).at("input_dim").get<std::size_t>();

  const std::size_t cols = csv_column_count(data_path);
  if (cols != input_dim && cols != input_dim + 1) {
    die("query CSV must have " + std::to_string(input_dim) + " input columns (optionally +1 "
        "output column); found " + std::to_string(cols), kExitUsage);
  }

  std::ifstream csv(data_path);
  std::string line;
  if (!no_header) std::getline(csv, line);
  std::ofstream out;
  const bool to_file = !out_path.empty();
  if (to_file) {
    out.open(out_path);
    if (!out) die("cannot write " + out_path, kExitUsage);
    out << "prediction\n";
    out.precision(17);
  }
  while (std::getline(csv, line)) {
    if (line.empty() || line == "\r") continue;
    std::vector<double> x;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) x.push_back(std::stod(field));
    if (x.size() == input_dim + 1) x.pop_back();  // drop the output column
    if (x.size() != input_dim) die("malformed query row", kExitUsage);
    double value = 0.0;
    check(poki_model_predict(model.get(), x.data(), x.size(), &value), kExitMethodFailure);
    (to_file ? out : std::cout) << value << '\n';
  }
  return kExitOk;
}

int cmd_experiment(const std::string& config_path, const std::string& out_override,
                   const std::string& format_override) {
  std::ifstream in(config_path);
  if (!in) die("cannot open config: " + config_path, kExitUsage);
  json cfg;
  try {
    in >> cfg;
  } catch (const std::exception& ex) {
    die(std::string("config parse failure: ") + ex.what(), kExitUsage);
  }
  if (!out_override.empty()) cfg["output"] = out_override;
  if (!format_override.empty()) cfg["format"] = format_override;

  char* report_raw = nullptr;
  check(poki_run_experiment(cfg.dump().c_str(), &report_raw), kExitUsage);
  const json report = json::parse(take_string(report_raw));

  std::printf("%-14s %12s %12s %12s %10s %8s\n", "method", "err_mean", "err_std", "err_median",
              "train_s", "status");
  bool all_ok = true;
  for (const auto& r : report) {
    const std::string status = r.at("status").get<std::string>();
    std::printf("%-14s %12.6g %12.6g %12.6g %10.3f %8s\n",
                r.at("method").get<std::string>().c_str(), r.at("error_mean").get<double>(),
                r.at("error_std").get<double>(), r.at("error_median").get<double>(),
                r.at("train_seconds").get<double>(), status == "ok" ? "ok" : "FAILED");
    if (status != "ok") {
      std::cerr << r.at("method").get<std::string>() << ": " << status << '\n';
      all_ok = false;
    }
  }
  return all_ok ? kExitOk : kExitMethodFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lipschitz interpolation regression with certified hyperparameter optimisation"};
  app.require_subcommand(1);

  // gen
  std::string gen_generator, gen_noise = "none", gen_out;
  std::size_t gen_n = 0, gen_d = 1;
  std::uint64_t gen_seed = 0;
  double gen_noise_param = 0.0;
  auto* gen = app.add_subcommand("gen", "generate a synthetic dataset CSV");
  gen->add_option("--generator", gen_generator, "artificial | periodic | pendulum")->required();
  gen->add_option("--n", gen_n, "number of samples")->required();
  gen->add_option("--d", gen_d, "input dimension (artificial only)");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--noise", gen_noise, "none | gaussian | uniform");
  gen->add_option("--noise-param", gen_noise_param, "sd (gaussian) or halfwidth (uniform)");
  gen->add_option("--out", gen_out, "output CSV path")->required();

  // fit
  FitOptions fit_opt;
  std::string fit_model_out;
  auto* fit = app.add_subcommand("fit", "train a model and write it as JSON");
  add_fit_options(fit, fit_opt);
  fit->add_option("--out", fit_model_out, "model output path (JSON)");

  // predict
  std::string pred_model, pred_data, pred_out;
  bool pred_no_header = false;
  auto* predict = app.add_subcommand("predict", "evaluate a saved model on query inputs");
  predict->add_option("--model", pred_model, "model JSON path")->required();
  predict->add_option("--data", pred_data, "query CSV (output column ignored if present)")
      ->required();
  predict->add_option("--out", pred_out, "predictions CSV (stdout when omitted)");
  predict->add_flag("--no-header", pred_no_header, "query CSV has no header row");

  // experiment
  std::string exp_config, exp_out, exp_format;
  auto* experiment = app.add_subcommand("experiment", "run an experiment suite from JSON config");
  experiment->add_option("--config", exp_config, "experiment config JSON")->required();
  experiment->add_option("--out", exp_out, "report path override");
  experiment->add_option("--format", exp_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json", ""}));

  // trace
  FitOptions trace_opt;
  auto* trace = app.add_subcommand("trace", "fit a poki model and record the optimiser trace");
  add_fit_options(trace, trace_opt);
  trace->add_option("--out", trace_opt.trace_path, "trace CSV output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      return cmd_gen(gen_generator, gen_n, gen_d, gen_seed, gen_noise, gen_noise_param, gen_out);
    }
    if (fit->parsed()) {
      ModelPtr model = run_fit(fit_opt);
      print_fit_summary(model.get());
      if (!fit_model_out.empty()) {
        char* doc_raw = nullptr;
        check(poki_model_to_json(model.get(), &doc_raw), kExitMethodFailure);
        std::ofstream out(fit_model_out);
        if (!out) die("cannot write " + fit_model_out, kExitUsage);
        out << take_string(doc_raw) << '\n';
        std::cout << "model written to " << fit_model_out << '\n';
      }
      return kExitOk;
    }
    if (predict->parsed()) return cmd_predict(pred_model, pred_data, pred_no_header, pred_out);
    if (experiment->parsed()) return cmd_experiment(exp_config, exp_out, exp_format);
    if (trace->parsed()) {
      ModelPtr model = run_fit(trace_opt);
      print_fit_summary(model.get());
      std::cout << "trace written to " << trace_opt.trace_path << '\n';
      return kExitOk;
    }
  } catch (const std::exception& ex) {
    die(ex.what(), kExitMethodFailure);
  }
  return kExitUsage;
}
