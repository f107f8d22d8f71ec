#include "poki/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "poki/errors.hpp"
#include "poki/model.hpp"
#include "poki/rng.hpp"

namespace poki {

using nlohmann::json;

ErrorStats error_stats(std::span<const double> residuals) {
  if (residuals.empty()) throw std::invalid_argument("error_stats: empty residual vector");
  std::vector<double> abs_r(residuals.size());
  std::transform(residuals.begin(), residuals.end(), abs_r.begin(),
                 [](double r) { return std::abs(r); });
  const auto n = static_cast<double>(abs_r.size());
  ErrorStats stats;
  for (double r : abs_r) stats.mean += r;
  stats.mean /= n;
  if (abs_r.size() > 1) {
    double ss = 0.0;
    for (double r : abs_r) ss += (r - stats.mean) * (r - stats.mean);
    stats.std = std::sqrt(ss / (n - 1.0));
  }
  std::sort(abs_r.begin(), abs_r.end());
  const std::size_t m = abs_r.size() / 2;
  stats.median = abs_r.size() % 2 == 1 ? abs_r[m] : 0.5 * (abs_r[m - 1] + abs_r[m]);
  return stats;
}

ExperimentConfig parse_experiment_config(const json& doc) {
  ExperimentConfig cfg;
  cfg.name = doc.value("name", "experiment");
  cfg.dataset = doc.at("dataset");
  cfg.test = doc.at("test");
  for (const auto& m : doc.at("methods")) cfg.methods.push_back(m);
  if (cfg.methods.empty()) throw std::invalid_argument("experiment: no methods");
  if (doc.contains("seeds")) {
    cfg.seeds = doc["seeds"].get<std::vector<std::uint64_t>>();
  } else {
    cfg.seeds = {0};
  }
  if (cfg.seeds.empty()) throw std::invalid_argument("experiment: empty seed list");
  cfg.output_path = doc.value("output", "");
  cfg.format = doc.value("format", "csv");
  if (cfg.format != "csv" && cfg.format != "json") {
    throw std::invalid_argument("experiment: format must be csv or json");
  }
  return cfg;
}

namespace {

NoiseModel noise_from_json(const json& spec, std::uint64_t seed) {
  NoiseModel noise;
  noise.seed = mix_seed(seed, 2);
  if (spec.is_null()) return noise;
  const std::string variant = spec.value("variant", "none");
  noise.param = spec.value("param", 0.0);
  if (variant == "none") {
    noise.kind = NoiseModel::Kind::None;
  } else if (variant == "gaussian") {
    noise.kind = NoiseModel::Kind::Gaussian;
  } else if (variant == "uniform") {
    noise.kind = NoiseModel::Kind::UniformSymmetric;
  } else {
    throw std::invalid_argument("unknown noise variant: " + variant);
  }
  return noise;
}

struct Materialized {
  Dataset train;
  std::optional<Dataset> holdout;  // observed test outputs (csv / holdout case)
  std::optional<Dataset> queries;  // fresh query inputs (true-target case)
  TruthFn truth;                   // defined when queries is set
};

Materialized materialize(const ExperimentConfig& cfg, std::uint64_t seed) {
  Materialized mat;
  const json& ds = cfg.dataset;
  const std::string test_kind = cfg.test.value("kind", "holdout");

  if (ds.contains("csv")) {
    auto full = load_csv(ds.at("csv").get<std::string>(),
                         ds.at("input_columns").get<std::vector<std::size_t>>(),
                         ds.at("output_column").get<std::size_t>(), ds.value("header", true));
    const double fraction = ds.value("train_fraction", 0.5);
    auto [train, test] = train_test_split(full, fraction, seed);
    mat.train = std::move(train);
    if (test_kind != "holdout") {
      throw std::invalid_argument("csv datasets support only holdout test sets");
    }
    mat.holdout = std::move(test);
    return mat;
  }

  const std::string generator = ds.at("generator").get<std::string>();
  const auto n = ds.at("n").get<std::size_t>();
  const NoiseModel noise = noise_from_json(ds.value("noise", json{}), seed);
  if (generator == "artificial") {
    const auto dim = ds.value("d", std::size_t{1});
    mat.train = gen_artificial(dim, n, noise, seed);
    mat.truth = [](std::span<const double> x) { return target_artificial(x); };
    if (test_kind == "true_function") {
      mat.queries = sample_inputs_artificial(dim, cfg.test.value("n", std::size_t{4000}),
                                             mix_seed(seed, 4));
    }
  } else if (generator == "periodic") {
    mat.train = gen_periodic(n, noise, seed);
    mat.truth = [](std::span<const double> x) { return target_periodic(x[0]); };
    if (test_kind == "true_function") {
      mat.queries = sample_inputs_artificial(1, cfg.test.value("n", std::size_t{4000}),
                                             mix_seed(seed, 4));
    }
  } else if (generator == "pendulum") {
    mat.train = gen_pendulum(n, noise, seed);
    mat.truth = [](std::span<const double> x) { return target_pendulum(x); };
    if (test_kind == "true_function") {
      mat.queries = sample_inputs_pendulum(cfg.test.value("n", std::size_t{4000}),
                                           mix_seed(seed, 4));
    }
  } else {
    throw std::invalid_argument("unknown generator: " + generator);
  }
  if (test_kind == "holdout") {
    throw std::invalid_argument("generator datasets need a true_function test set");
  }
  if (test_kind != "true_function") {
    throw std::invalid_argument("unknown test kind: " + test_kind);
  }
  return mat;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<ResultRecord> run_experiment(const ExperimentConfig& cfg) {
  std::vector<ResultRecord> records;
  for (const auto& method_cfg : cfg.methods) {
    ResultRecord rec;
    rec.method = method_cfg.at("method").get<std::string>();
    try {
      std::vector<double> residuals;
      double train_seconds = 0.0;
      double predict_seconds = 0.0;
      std::size_t predictions = 0;
      double gap_sum = 0.0;
      double evals_sum = 0.0;
      std::size_t opt_runs = 0;

      for (std::uint64_t seed : cfg.seeds) {
        const Materialized mat = materialize(cfg, seed);
        json fit_cfg = method_cfg;
        if (!fit_cfg.contains("seed")) fit_cfg["seed"] = mix_seed(seed, 10);

        const auto t0 = std::chrono::steady_clock::now();
        const Model model = fit_model(mat.train, fit_cfg);
        train_seconds += seconds_since(t0);

        if (model.opt) {
          gap_sum += model.opt->gap;
          evals_sum += model.opt->evals;
          ++opt_runs;
        }

        const Dataset& test = mat.queries ? *mat.queries : *mat.holdout;
        const auto t1 = std::chrono::steady_clock::now();
        for (std::size_t i = 0; i < test.rows(); ++i) {
          const auto x = test.input(i);
          const double target = mat.queries ? mat.truth(x) : test.outputs[i];
          residuals.push_back(model.predict(x) - target);
        }
        predict_seconds += seconds_since(t1);
        predictions += test.rows();
      }

      const ErrorStats stats = error_stats(residuals);
      rec.error_mean = stats.mean;
      rec.error_std = stats.std;
      rec.error_median = stats.median;
      rec.train_seconds = train_seconds / static_cast<double>(cfg.seeds.size());
      rec.mean_predict_seconds = predict_seconds / static_cast<double>(predictions);
      if (opt_runs > 0) {
        rec.opt_gap = gap_sum / static_cast<double>(opt_runs);
        rec.opt_evals = evals_sum / static_cast<double>(opt_runs);
      }
    } catch (const std::exception& ex) {
      rec.status = ex.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

namespace {

constexpr const char* kCsvHeader =
    "method,error_mean,error_std,error_median,train_seconds,mean_predict_seconds,"
    "opt_gap,opt_evals,status";

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

void emit_report(std::span<const ResultRecord> records, const std::string& path,
                 ReportFormat format) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write report: " + path);
  if (format == ReportFormat::Csv) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
      out << r.method << ',' << fmt(r.error_mean) << ',' << fmt(r.error_std) << ','
          << fmt(r.error_median) << ',' << fmt(r.train_seconds) << ','
          << fmt(r.mean_predict_seconds) << ',' << (r.opt_gap ? fmt(*r.opt_gap) : "") << ','
          << (r.opt_evals ? fmt(*r.opt_evals) : "") << ',' << r.status << '\n';
    }
  } else {
    json arr = json::array();
    for (const auto& r : records) {
      json obj{{"method", r.method},
               {"error_mean", r.error_mean},
               {"error_std", r.error_std},
               {"error_median", r.error_median},
               {"train_seconds", r.train_seconds},
               {"mean_predict_seconds", r.mean_predict_seconds},
               {"opt_gap", r.opt_gap ? json(*r.opt_gap) : json(nullptr)},
               {"opt_evals", r.opt_evals ? json(*r.opt_evals) : json(nullptr)},
               {"status", r.status}};
      arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
  }
  if (!out) throw io_error("write failed: " + path);
}

std::vector<ResultRecord> read_report_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open report: " + path);
  std::string line;
  if (!std::getline(in, line)) throw io_error("report is empty: " + path);
  std::vector<ResultRecord> records;
  auto parse_double = [](const std::string& s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{}) throw io_error("report: bad numeric field '" + s + "'");
    return v;
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
      if (c == ',') {
        fields.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur.push_back(c);
      }
    }
    fields.push_back(cur);
    if (fields.size() != 9) throw io_error("report: malformed row");
    ResultRecord r;
    r.method = fields[0];
    r.error_mean = parse_double(fields[1]);
    r.error_std = parse_double(fields[2]);
    r.error_median = parse_double(fields[3]);
    r.train_seconds = parse_double(fields[4]);
    r.mean_predict_seconds = parse_double(fields[5]);
    if (!fields[6].empty()) r.opt_gap = parse_double(fields[6]);
    if (!fields[7].empty()) r.opt_evals = parse_double(fields[7]);
    r.status = fields[8];
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace poki
