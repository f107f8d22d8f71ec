#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "poki/dataset.hpp"

namespace poki {

struct ErrorStats {
  double mean = 0.0;
  double std = 0.0;  // sample std (n-1 denominator), 0 for a single residual
  double median = 0.0;
};

/// Mean / sample std / median of the absolute residuals.
ErrorStats error_stats(std::span<const double> residuals);

struct ResultRecord {
  std::string method;
  double error_mean = 0.0;
  double error_std = 0.0;
  double error_median = 0.0;
  double train_seconds = 0.0;
  double mean_predict_seconds = 0.0;
  std::optional<double> opt_gap;    // poki-* methods only
  std::optional<double> opt_evals;  // mean evaluations across seeds
  std::string status = "ok";        // "ok" or the failure message
};

struct ExperimentConfig {
  std::string name;
  nlohmann::json dataset;  // generator spec or csv spec
  nlohmann::json test;     // {"kind":"true_function","n":N} or {"kind":"holdout"}
  std::vector<nlohmann::json> methods;
  std::vector<std::uint64_t> seeds;
  std::string output_path;  // optional; empty means no file
  std::string format = "csv";
};

ExperimentConfig parse_experiment_config(const nlohmann::json& doc);

/// Runs every method over every seed, pooling residuals per method across
/// seeds. A failing method is recorded with its message; the rest still run.
std::vector<ResultRecord> run_experiment(const ExperimentConfig& cfg);

enum class ReportFormat { Csv, Json };

void emit_report(std::span<const ResultRecord> records, const std::string& path,
                 ReportFormat format);

/// Reads back a CSV report written by emit_report.
std::vector<ResultRecord> read_report_csv(const std::string& path);

}  // namespace poki
