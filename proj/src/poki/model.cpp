#include "poki/model.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace poki {

using nlohmann::json;

double Model::predict(std::span<const double> x) const {
  if (kind == Kind::Linear) return predict_linear(*linear, x);
  return poki::predict(*ki, x);
}

std::size_t Model::input_dim() const {
  return kind == Kind::Linear ? linear->weights.size() : ki->data.dim;
}

namespace {

PokiConfig poki_config_from_json(const Dataset& data, const json& cfg, MetricVariant variant) {
  PokiConfig pc;
  pc.metric = make_metric(variant, data.dim);
  pc.seed = cfg.value("seed", std::uint64_t{0});
  pc.budget = cfg.value("budget", 2000);
  pc.tol = cfg.value("tol", 1e-3);
  pc.split_ratio = cfg.value("split_ratio", 0.5);
  if (cfg.contains("theta_box")) {
    pc.box_lo = cfg.at("theta_box").at("lo").get<std::vector<double>>();
    pc.box_hi = cfg.at("theta_box").at("hi").get<std::vector<double>>();
    if (pc.box_lo.size() == 1 && pc.metric.theta_dim > 1) {
      // scalar box broadcast across all parameter axes
      pc.box_lo.assign(pc.metric.theta_dim, pc.box_lo[0]);
      pc.box_hi.assign(pc.metric.theta_dim, pc.box_hi[0]);
    }
  } else {
    std::tie(pc.box_lo, pc.box_hi) = default_theta_box(data, pc.metric);
  }
  return pc;
}

Model fit_poki(const Dataset& data, const json& cfg, MetricVariant variant,
               const std::string& method, const TraceFn& trace) {
  auto outcome = train(data, poki_config_from_json(data, cfg, variant), trace);
  Model model;
  model.kind = Model::Kind::Ki;
  model.method = method;
  model.ki = std::move(outcome.predictor);
  model.opt = std::move(outcome.opt);
  return model;
}

}  // namespace

Model fit_model(const Dataset& data, const json& config, const TraceFn& trace) {
  validate(data);
  const std::string method = config.at("method").get<std::string>();
  if (method == "lin") {
    Model model;
    model.kind = Model::Kind::Linear;
    model.method = method;
    model.linear = fit_linear(data);
    return model;
  }
  if (method == "lacki") {
    Model model;
    model.kind = Model::Kind::Ki;
    model.method = method;
    model.ki = lacki(data);
    return model;
  }
  if (method == "poki-lc") return fit_poki(data, config, MetricVariant::ScaledNorm, method, trace);
  if (method == "poki-ard") return fit_poki(data, config, MetricVariant::ArdMax, method, trace);
  if (method == "poki-periodic") {
    if (!config.contains("theta_box")) {
      throw std::invalid_argument("poki-periodic requires a theta_box (frequency range)");
    }
    return fit_poki(data, config, MetricVariant::PeriodicSine, method, trace);
  }
  throw std::invalid_argument("unknown method: " + method);
}

json model_to_json(const Model& model) {
  json doc;
  doc["format"] = "poki-model";
  doc["version"] = 1;
  doc["method"] = model.method;
  if (model.kind == Model::Kind::Linear) {
    doc["kind"] = "linear";
    doc["linear"] = {{"weights", model.linear->weights}, {"intercept", model.linear->intercept}};
  } else {
    doc["kind"] = "ki";
    const Predictor& p = *model.ki;
    json rows = json::array();
    for (std::size_t i = 0; i < p.data.rows(); ++i) {
      const auto x = p.data.input(i);
      rows.push_back(std::vector<double>(x.begin(), x.end()));
    }
    doc["data"] = {{"inputs", std::move(rows)}, {"outputs", p.data.outputs}};
    doc["metric"] = {{"variant", to_string(p.metric.variant)}, {"theta", p.theta}};
  }
  if (model.opt) {
    doc["fit"] = {{"argmin", model.opt->argmin},
                  {"min_value", model.opt->min_value},
                  {"lower_bound", model.opt->lower_bound},
                  {"gap", model.opt->gap},
                  {"evals", model.opt->evals},
                  {"converged", model.opt->converged}};
  }
  return doc;
}

Model model_from_json(const json& doc) {
  if (doc.value("format", "") != "poki-model") {
    throw std::invalid_argument("not a model document");
  }
  Model model;
  model.method = doc.at("method").get<std::string>();
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "linear") {
    model.kind = Model::Kind::Linear;
    model.linear = LinearModel{doc.at("linear").at("weights").get<std::vector<double>>(),
                               doc.at("linear").at("intercept").get<double>()};
  } else if (kind == "ki") {
    model.kind = Model::Kind::Ki;
    Dataset data;
    const auto& rows = doc.at("data").at("inputs");
    data.outputs = doc.at("data").at("outputs").get<std::vector<double>>();
    if (rows.empty()) throw std::invalid_argument("model: empty dataset");
    data.dim = rows.front().size();
    for (const auto& row : rows) {
      const auto x = row.get<std::vector<double>>();
      if (x.size() != data.dim) throw std::invalid_argument("model: ragged dataset");
      data.inputs.insert(data.inputs.end(), x.begin(), x.end());
    }
    if (data.inputs.size() != data.outputs.size() * data.dim) {
      throw std::invalid_argument("model: inputs/outputs mismatch");
    }
    const auto variant = metric_variant_from_string(doc.at("metric").at("variant"));
    model.ki = make_predictor(std::move(data), make_metric(variant, rows.front().size()),
                              doc.at("metric").at("theta").get<std::vector<double>>());
  } else {
    throw std::invalid_argument("model: unknown kind " + kind);
  }
  if (doc.contains("fit")) {
    OptResult opt;
    opt.argmin = doc["fit"].at("argmin").get<std::vector<double>>();
    opt.min_value = doc["fit"].at("min_value").get<double>();
    opt.lower_bound = doc["fit"].at("lower_bound").get<double>();
    opt.gap = doc["fit"].at("gap").get<double>();
    opt.evals = doc["fit"].at("evals").get<int>();
    opt.converged = doc["fit"].at("converged").get<bool>();
    model.opt = std::move(opt);
  }
  return model;
}

}  // namespace poki
