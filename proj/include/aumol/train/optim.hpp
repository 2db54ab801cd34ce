#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "aumol/errors.hpp"
#include "aumol/nn/parameter.hpp"

namespace aumol::train {

struct ScheduleConfig {
  double base_lr = 3e-4;
  long warmup_steps = 16;
  long total_steps = 0;
};

/// Linear ramp 0 -> base_lr over [0, warmup], then linear decay to 0 at total.
inline double lr_at(long step, const ScheduleConfig& cfg) {
  if (step < 0 || step > cfg.total_steps) {
    throw ContractError("lr_at: step " + std::to_string(step) + " outside [0, " + std::to_string(cfg.total_steps) +
                        "]");
  }
  if (step <= cfg.warmup_steps) {
    return cfg.warmup_steps == 0 ? cfg.base_lr
                                 : cfg.base_lr * static_cast<double>(step) / static_cast<double>(cfg.warmup_steps);
  }
  return cfg.base_lr * static_cast<double>(cfg.total_steps - step) /
         static_cast<double>(cfg.total_steps - cfg.warmup_steps);
}

inline double global_grad_norm(const std::vector<nn::NamedParameter>& params) {
  double sq = 0.0;
  for (const auto& p : params) {
    for (double g : p.value.grad()) {
      if (!std::isfinite(g)) throw NumericError("non-finite gradient in parameter '" + p.name + "'");
      sq += g * g;
    }
  }
  return std::sqrt(sq);
}

/// Scales every gradient by max_norm / g when the global L2 norm g exceeds
/// max_norm. Returns the factor applied (1 when untouched).
inline double clip_grad_norm(const std::vector<nn::NamedParameter>& params, double max_norm) {
  if (!(max_norm > 0.0)) throw ContractError("clip_grad_norm: max_norm must be > 0");
  const double norm = global_grad_norm(params);
  if (norm <= max_norm) return 1.0;
  const double scale = max_norm / norm;
  for (const auto& p : params) {
    auto v = p.value;
    if (!v.has_grad()) continue;
    for (double& g : v.mutable_grad()) g *= scale;
  }
  return scale;
}

struct AdamWConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double weight_decay = 0.01;
};

struct OptimizerState {
  AdamWConfig cfg;
  long step = 0;
  std::vector<std::vector<double>> m;
  std::vector<std::vector<double>> v;

  OptimizerState() = default;
  OptimizerState(const std::vector<nn::NamedParameter>& params, AdamWConfig c) : cfg(c) {
    for (const auto& p : params) {
      m.emplace_back(p.value.size(), 0.0);
      v.emplace_back(p.value.size(), 0.0);
    }
  }
};

/// Decoupled decay then bias-corrected Adam:
///   p <- p (1 - lr wd);  p <- p - lr m_hat / (sqrt(v_hat) + eps).
/// A parameter without a gradient is treated as having a zero gradient.
inline void adamw_step(const std::vector<nn::NamedParameter>& params, OptimizerState& state, double lr) {
  if (state.m.size() != params.size()) throw ContractError("adamw_step: optimizer state does not match parameters");
  ++state.step;
  const auto& c = state.cfg;
  const double corr1 = 1.0 - std::pow(c.beta1, static_cast<double>(state.step));
  const double corr2 = 1.0 - std::pow(c.beta2, static_cast<double>(state.step));
  const double decay = 1.0 - lr * c.weight_decay;
  for (std::size_t k = 0; k < params.size(); ++k) {
    auto p = params[k].value;
    auto values = p.mutable_data();
    const auto grad = p.grad();
    auto& m = state.m[k];
    auto& v = state.v[k];
    if (m.size() != values.size()) throw ContractError("adamw_step: moment shape mismatch for " + params[k].name);
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double g = grad.empty() ? 0.0 : grad[i];
      m[i] = c.beta1 * m[i] + (1.0 - c.beta1) * g;
      v[i] = c.beta2 * v[i] + (1.0 - c.beta2) * g * g;
      const double m_hat = m[i] / corr1;
      const double v_hat = v[i] / corr2;
      const double next = values[i] * decay - lr * m_hat / (std::sqrt(v_hat) + c.eps);
      if (!std::isfinite(next)) throw NumericError("non-finite update in parameter '" + params[k].name + "'");
      values[i] = next;
    }
  }
}

}  // namespace aumol::train
