#include "poki/poki.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#include "poki/bench.hpp"
#include "poki/dataset.hpp"
#include "poki/errors.hpp"
#include "poki/model.hpp"
#include "poki/optimizer.hpp"
#include "poki/tuning.hpp"

using nlohmann::json;

struct poki_dataset {
  poki::Dataset data;
};

struct poki_model {
  poki::Model model;
};

namespace {

thread_local std::string g_last_error;

poki_status fail(poki_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Maps C++ exceptions from the core onto the C error codes.
template <typename Fn>
poki_status guarded(Fn&& fn) {
  try {
    fn();
    return POKI_OK;
  } catch (const poki::estimate_undefined_error& ex) {
    return fail(POKI_ERR_ESTIMATE_UNDEFINED, ex.what());
  } catch (const poki::numeric_error& ex) {
    return fail(POKI_ERR_NUMERIC, ex.what());
  } catch (const poki::io_error& ex) {
    return fail(POKI_ERR_IO, ex.what());
  } catch (const std::invalid_argument& ex) {
    return fail(POKI_ERR_INVALID_ARGUMENT, ex.what());
  } catch (const json::exception& ex) {
    return fail(POKI_ERR_INVALID_ARGUMENT, ex.what());
  } catch (const std::exception& ex) {
    return fail(POKI_ERR_INTERNAL, ex.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

poki::NoiseModel noise_from_spec(const json& spec) {
  poki::NoiseModel noise;
  if (spec.is_null()) return noise;
  const std::string variant = spec.value("variant", "none");
  noise.param = spec.value("param", 0.0);
  noise.seed = spec.value("seed", std::uint64_t{0});
  if (variant == "gaussian") {
    noise.kind = poki::NoiseModel::Kind::Gaussian;
  } else if (variant == "uniform") {
    noise.kind = poki::NoiseModel::Kind::UniformSymmetric;
  } else if (variant != "none") {
    throw std::invalid_argument("unknown noise variant: " + variant);
  }
  return noise;
}

}  // namespace

extern "C" {

const char* poki_version(void) { return "0.1.0"; }

const char* poki_last_error(void) { return g_last_error.c_str(); }

void poki_string_free(char* s) { delete[] s; }

poki_status poki_dataset_create(const double* inputs, size_t rows, size_t dim,
                                const double* outputs, poki_dataset** out) {
  return guarded([&] {
    if (!inputs || !outputs || !out) throw std::invalid_argument("null argument");
    poki::Dataset data;
    data.dim = dim;
    data.inputs.assign(inputs, inputs + rows * dim);
    data.outputs.assign(outputs, outputs + rows);
    poki::validate(data);
    *out = new poki_dataset{std::move(data)};
  });
}

poki_status poki_dataset_generate(const char* spec_json, poki_dataset** out) {
  return guarded([&] {
    if (!spec_json || !out) throw std::invalid_argument("null argument");
    const json spec = json::parse(spec_json);
    const std::string generator = spec.at("generator").get<std::string>();
    const auto n = spec.at("n").get<std::size_t>();
    const auto seed = spec.value("seed", std::uint64_t{0});
    auto noise = noise_from_spec(spec.value("noise", json{}));
    if (!spec.contains("noise") || !spec["noise"].contains("seed")) noise.seed = seed;
    poki::Dataset data;
    if (generator == "artificial") {
      data = poki::gen_artificial(spec.value("d", std::size_t{1}), n, noise, seed);
    } else if (generator == "periodic") {
      data = poki::gen_periodic(n, noise, seed);
    } else if (generator == "pendulum") {
      data = poki::gen_pendulum(n, noise, seed);
    } else {
      throw std::invalid_argument("unknown generator: " + generator);
    }
    *out = new poki_dataset{std::move(data)};
  });
}

poki_status poki_dataset_load_csv(const char* path, const size_t* input_columns,
                                  size_t n_input_columns, size_t output_column, int has_header,
                                  poki_dataset** out) {
  return guarded([&] {
    if (!path || !input_columns || !out) throw std::invalid_argument("null argument");
    std::vector<std::size_t> cols(input_columns, input_columns + n_input_columns);
    *out = new poki_dataset{
        poki::load_csv(path, cols, output_column, has_header != 0)};
  });
}

poki_status poki_dataset_save_csv(const poki_dataset* data, const char* path) {
  return guarded([&] {
    if (!data || !path) throw std::invalid_argument("null argument");
    poki::save_csv(data->data, path);
  });
}

size_t poki_dataset_rows(const poki_dataset* data) { return data ? data->data.rows() : 0; }

size_t poki_dataset_dim(const poki_dataset* data) { return data ? data->data.dim : 0; }

poki_status poki_dataset_output_stats(const poki_dataset* data, double* mean, double* stddev) {
  return guarded([&] {
    if (!data || !mean || !stddev) throw std::invalid_argument("null argument");
    const auto& y = data->data.outputs;
    const auto n = static_cast<double>(y.size());
    double m = 0.0;
    for (double v : y) m += v;
    m /= n;
    double ss = 0.0;
    for (double v : y) ss += (v - m) * (v - m);
    *mean = m;
    *stddev = y.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  });
}

poki_status poki_dataset_split(const poki_dataset* data, double train_fraction, uint64_t seed,
                               poki_dataset** train, poki_dataset** test) {
  return guarded([&] {
    if (!data || !train || !test) throw std::invalid_argument("null argument");
    auto [tr, te] = poki::train_test_split(data->data, train_fraction, seed);
    *train = new poki_dataset{std::move(tr)};
    *test = new poki_dataset{std::move(te)};
  });
}

void poki_dataset_free(poki_dataset* data) { delete data; }

poki_status poki_fit(const poki_dataset* data, const char* config_json, poki_model** out) {
  return guarded([&] {
    if (!data || !config_json || !out) throw std::invalid_argument("null argument");
    const json cfg = json::parse(config_json);
    poki::TraceFn trace;
    std::ofstream trace_out;
    if (cfg.contains("trace_path")) {
      trace_out.open(cfg.at("trace_path").get<std::string>());
      if (!trace_out) throw poki::io_error("cannot write trace file");
      trace_out << "iteration,evals,incumbent,lower_bound,gap\n";
      trace = [&trace_out](const poki::TraceRecord& r) {
        trace_out << r.iteration << ',' << r.evals << ',' << r.incumbent << ',' << r.lower_bound
                  << ',' << r.gap << '\n';
      };
    }
    *out = new poki_model{poki::fit_model(data->data, cfg, trace)};
  });
}

poki_status poki_model_predict(const poki_model* model, const double* x, size_t dim,
                               double* out) {
  return guarded([&] {
    if (!model || !x || !out) throw std::invalid_argument("null argument");
    *out = model->model.predict({x, dim});
  });
}

poki_status poki_model_predict_batch(const poki_model* model, const double* xs, size_t rows,
                                     size_t dim, double* out) {
  return guarded([&] {
    if (!model || (!xs && rows > 0) || !out) throw std::invalid_argument("null argument");
    for (size_t i = 0; i < rows; ++i) {
      out[i] = model->model.predict({xs + i * dim, dim});
    }
  });
}

poki_status poki_model_to_json(const poki_model* model, char** json_out) {
  return guarded([&] {
    if (!model || !json_out) throw std::invalid_argument("null argument");
    *json_out = dup_string(poki::model_to_json(model->model).dump());
  });
}

poki_status poki_model_from_json(const char* json_text, poki_model** out) {
  return guarded([&] {
    if (!json_text || !out) throw std::invalid_argument("null argument");
    *out = new poki_model{poki::model_from_json(json::parse(json_text))};
  });
}

poki_status poki_model_info(const poki_model* model, char** json_out) {
  return guarded([&] {
    if (!model || !json_out) throw std::invalid_argument("null argument");
    json info{{"method", model->model.method}, {"input_dim", model->model.input_dim()}};
    if (model->model.kind == poki::Model::Kind::Ki) {
      info["theta"] = model->model.ki->theta;
      info["metric"] = poki::to_string(model->model.ki->metric.variant);
    } else {
      info["weights"] = model->model.linear->weights;
      info["intercept"] = model->model.linear->intercept;
    }
    if (model->model.opt) {
      const auto& o = *model->model.opt;
      info["opt"] = {{"gap", o.gap},
                     {"evals", o.evals},
                     {"lower_bound", o.lower_bound},
                     {"min_value", o.min_value},
                     {"converged", o.converged}};
    }
    *json_out = dup_string(info.dump());
  });
}

void poki_model_free(poki_model* model) { delete model; }

poki_status poki_minimize(poki_objective_fn objective, void* user, const double* lo,
                          const double* hi, size_t dim, double holder_constant,
                          double holder_exponent, int budget, double tol, const char* trace_path,
                          double* argmin, double* min_value, double* lower_bound, int* evals) {
  return guarded([&] {
    if (!objective || !lo || !hi || !argmin || !min_value || !lower_bound || !evals) {
      throw std::invalid_argument("null argument");
    }
    poki::TraceFn trace;
    std::ofstream trace_out;
    if (trace_path) {
      trace_out.open(trace_path);
      if (!trace_out) throw poki::io_error("cannot write trace file");
      trace_out << "iteration,evals,incumbent,lower_bound,gap\n";
      trace = [&trace_out](const poki::TraceRecord& r) {
        trace_out << r.iteration << ',' << r.evals << ',' << r.incumbent << ',' << r.lower_bound
                  << ',' << r.gap << '\n';
      };
    }
    const auto result = poki::minimize(
        [&](std::span<const double> theta) { return objective(theta.data(), theta.size(), user); },
        {lo, dim}, {hi, dim}, poki::HolderSpec{holder_constant, holder_exponent}, budget, tol,
        trace);
    std::memcpy(argmin, result.argmin.data(), dim * sizeof(double));
    *min_value = result.min_value;
    *lower_bound = result.lower_bound;
    *evals = result.evals;
  });
}

poki_status poki_run_experiment(const char* config_json, char** report_json_out) {
  return guarded([&] {
    if (!config_json || !report_json_out) throw std::invalid_argument("null argument");
    const auto cfg = poki::parse_experiment_config(json::parse(config_json));
    const auto records = poki::run_experiment(cfg);
    if (!cfg.output_path.empty()) {
      poki::emit_report(records, cfg.output_path,
                        cfg.format == "json" ? poki::ReportFormat::Json
                                             : poki::ReportFormat::Csv);
    }
    json arr = json::array();
    for (const auto& r : records) {
      arr.push_back({{"method", r.method},
                     {"error_mean", r.error_mean},
                     {"error_std", r.error_std},
                     {"error_median", r.error_median},
                     {"train_seconds", r.train_seconds},
                     {"mean_predict_seconds", r.mean_predict_seconds},
                     {"opt_gap", r.opt_gap ? json(*r.opt_gap) : json(nullptr)},
                     {"opt_evals", r.opt_evals ? json(*r.opt_evals) : json(nullptr)},
                     {"status", r.status}});
    }
    *report_json_out = dup_string(arr.dump());
  });
}

}  // extern "C"
