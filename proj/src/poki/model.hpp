#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <span>
#include <string>

#include "poki/baselines.hpp"
#include "poki/optimizer.hpp"
#include "poki/predictor.hpp"
#include "poki/tuning.hpp"

namespace poki {

/// A trained model of any supported method, with fit metadata. Serialises to
/// a self-contained JSON document (KI models embed their conditioning data).
struct Model {
  enum class Kind { Ki, Linear };
  Kind kind = Kind::Ki;
  std::string method;  // "lin", "lacki", "poki-lc", "poki-ard", "poki-periodic"
  std::optional<Predictor> ki;
  std::optional<LinearModel> linear;
  std::optional<OptResult> opt;  // present for poki-* methods

  double predict(std::span<const double> x) const;
  std::size_t input_dim() const;
};

/// Method configuration: {"method": ..., "seed", "budget", "tol",
/// "split_ratio", "theta_box": {"lo": [...], "hi": [...]}}. Every field but
/// "method" is optional; the theta box defaults per method where possible.
Model fit_model(const Dataset& data, const nlohmann::json& config, const TraceFn& trace = {});

nlohmann::json model_to_json(const Model& model);
Model model_from_json(const nlohmann::json& doc);

}  // namespace poki
