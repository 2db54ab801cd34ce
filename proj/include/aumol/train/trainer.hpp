#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "aumol/losses/losses.hpp"
#include "aumol/model/aumol.hpp"
#include "aumol/train/optim.hpp"

namespace aumol::train {

using ad::DiffArray;
using nn::Component;

struct Stage {
  int epochs = 1;
  std::vector<Component> trainable;
};

struct StagePlan {
  std::vector<Stage> stages;

  static StagePlan default_plan() {
    return {{{2, {Component::adapter}}, {1, {Component::encoder}}, {1, {Component::decoder_lora}}}};
  }
  int total_epochs() const {
    int n = 0;
    for (const auto& s : stages) n += s.epochs;
    return n;
  }
  /// Index of the stage that owns `epoch` (0-based).
  std::size_t stage_of_epoch(int epoch) const {
    int end = 0;
    for (std::size_t i = 0; i < stages.size(); ++i) {
      end += stages[i].epochs;
      if (epoch < end) return i;
    }
    throw ContractError("epoch " + std::to_string(epoch) + " beyond the plan");
  }
  std::vector<std::string> violations() const {
    std::vector<std::string> out;
    if (stages.empty()) out.push_back("plan must have at least one stage");
    for (std::size_t i = 0; i < stages.size(); ++i) {
      if (stages[i].epochs < 1) out.push_back("plan[" + std::to_string(i) + "].epochs must be >= 1");
      if (stages[i].trainable.empty()) out.push_back("plan[" + std::to_string(i) + "].trainable must be non-empty");
    }
    return out;
  }
};

struct TrainConfig {
  int batch_size = 4;
  long warmup_steps = 16;
  double base_lr = 3e-4;
  double weight_decay = 0.01;
  double clip_norm = 1.0;
  double alpha = 1.0;
  std::uint64_t seed = 0;
  std::string prompt = std::string(model::kDefaultPrompt);

  std::vector<std::string> violations() const {
    std::vector<std::string> out;
    if (batch_size < 1) out.push_back("batch_size must be >= 1");
    if (warmup_steps < 0) out.push_back("warmup_steps must be >= 0");
    if (!(base_lr > 0.0)) out.push_back("base_lr must be > 0");
    if (weight_decay < 0.0) out.push_back("weight_decay must be >= 0");
    if (!(clip_norm > 0.0)) out.push_back("clip_norm must be > 0");
    if (alpha < 0.0) out.push_back("alpha must be >= 0");
    return out;
  }
};

inline long steps_per_epoch(std::size_t dataset_size, int batch_size) {
  return static_cast<long>((dataset_size + static_cast<std::size_t>(batch_size) - 1) / static_cast<std::size_t>(batch_size));
}

inline long total_steps(std::size_t dataset_size, const TrainConfig& cfg, const StagePlan& plan) {
  return steps_per_epoch(dataset_size, cfg.batch_size) * plan.total_epochs();
}

/// Marks exactly the stage's components trainable and returns them.
inline std::vector<nn::NamedParameter> apply_stage(const model::Model& m, const Stage& stage) {
  if (stage.trainable.empty()) throw ConfigError("stage has no trainable components");
  std::vector<nn::NamedParameter> active;
  for (auto& p : m.parameters()) {
    const bool on = std::find(stage.trainable.begin(), stage.trainable.end(), p.component) != stage.trainable.end();
    auto v = p.value;
    v.set_requires_grad(on);
    v.zero_grad();
    if (on) active.push_back(p);
  }
  return active;
}

/// One training utterance with features precomputed.
struct Example {
  std::string id;
  DiffArray features;                // n_mels x frames, constant
  std::vector<std::int32_t> target;  // transcript tokens + EOS
  std::vector<std::int32_t> text;    // transcript tokens (alignment target)
};

inline Example make_example(const model::Model& m, std::string id, const dsp::LogMelFeatures& features,
                            const std::string& transcript) {
  Example ex;
  ex.id = std::move(id);
  ex.features = model::to_diff(features.values);
  ex.text = m.vocab.encode(transcript);
  if (ex.text.empty()) throw ContractError("example '" + ex.id + "' has an empty transcript");
  if (ex.text.size() + 1 > static_cast<std::size_t>(m.cfg.max_text_len)) {
    throw ContractError("example '" + ex.id + "' transcript exceeds max_text_len " +
                        std::to_string(m.cfg.max_text_len));
  }
  ex.target = ex.text;
  ex.target.push_back(model::Vocabulary::kEos);
  return ex;
}

struct ExampleLoss {
  DiffArray output;
  DiffArray alignment;
};

inline ExampleLoss example_loss(const model::Model& m, const Example& ex, std::span<const std::int32_t> prompt) {
  auto audio = model::adapt(model::encode_audio(m, ex.features), m.adapter, m.cfg.adapter_variant);
  auto in = model::build_decoder_input(m, audio, prompt, ex.target);
  auto out = losses::output_loss(model::decoder_forward(m, in.combined), in.labels, in.mask);
  auto align = losses::matched_alignment_loss(audio.values, model::embed_tokens(m, ex.text).values).loss;
  return {out, align};
}

struct BatchLoss {
  DiffArray output, alignment, total;
  losses::LossBreakdown breakdown;
};

/// Mean of each term over the batch, combined with weight alpha.
inline BatchLoss batch_loss(const model::Model& m, const std::vector<const Example*>& batch,
                            std::span<const std::int32_t> prompt, double alpha) {
  if (batch.empty()) throw ContractError("empty batch");
  DiffArray out, align;
  for (const auto* ex : batch) {
    auto l = example_loss(m, *ex, prompt);
    out = out.defined() ? ad::add(out, l.output) : l.output;
    align = align.defined() ? ad::add(align, l.alignment) : l.alignment;
  }
  const double inv = 1.0 / static_cast<double>(batch.size());
  BatchLoss b;
  b.output = ad::scale(out, inv);
  b.alignment = ad::scale(align, inv);
  b.total = losses::weighted_total(b.output, b.alignment, alpha);
  b.breakdown = losses::total_loss(b.output.item(), b.alignment.item(), alpha);
  return b;
}

struct LogRecord {
  long step = 0;  // 1-based update index
  int epoch = 0;
  int stage = 0;
  double lr = 0.0;
  double output_loss = 0.0;
  double alignment_loss = 0.0;
  double total = 0.0;
  double grad_norm = 0.0;
};

struct TrainHooks {
  std::function<void(const LogRecord&)> on_step;
  /// Called after the last update of each epoch.
  std::function<void(int epoch, int stage, long step)> on_epoch_end;
};

struct TrainResult {
  std::vector<LogRecord> log;
  long total_steps = 0;
};

/// Staged training: per step forward -> loss -> backward -> clip -> AdamW at
/// lr_at(step). Optimizer moments reset at every stage boundary.
inline TrainResult train(model::Model& m, const std::vector<Example>& data, const TrainConfig& cfg,
                         const StagePlan& plan, const TrainHooks& hooks = {}) {
  if (data.empty()) throw ContractError("train: empty dataset");
  auto problems = cfg.violations();
  for (auto& p : plan.violations()) problems.push_back(std::move(p));
  TrainResult result;
  if (problems.empty()) {
    result.total_steps = total_steps(data.size(), cfg, plan);
    if (cfg.warmup_steps >= result.total_steps) {
      problems.push_back("warmup_steps (" + std::to_string(cfg.warmup_steps) + ") must be < total_steps (" +
                         std::to_string(result.total_steps) + ")");
    }
  }
  if (!problems.empty()) {
    std::string msg = "invalid training setup:";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw ConfigError(msg);
  }
  const ScheduleConfig sched{cfg.base_lr, cfg.warmup_steps, result.total_steps};
  const AdamWConfig adam{0.9, 0.999, 1e-8, cfg.weight_decay};
  const auto prompt = model::prompt_ids(m, cfg.prompt);
  const long per_epoch = steps_per_epoch(data.size(), cfg.batch_size);

  std::mt19937_64 order_rng(cfg.seed);
  std::vector<std::size_t> order(data.size());
  long step = 0;
  int epoch = 0;
  for (std::size_t si = 0; si < plan.stages.size(); ++si) {
    const auto active = apply_stage(m, plan.stages[si]);
    OptimizerState state(active, adam);
    for (int e = 0; e < plan.stages[si].epochs; ++e, ++epoch) {
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::shuffle(order.begin(), order.end(), order_rng);
      for (long b = 0; b < per_epoch; ++b) {
        ++step;
        std::vector<const Example*> batch;
        const auto lo = static_cast<std::size_t>(b) * static_cast<std::size_t>(cfg.batch_size);
        const auto hi = std::min(data.size(), lo + static_cast<std::size_t>(cfg.batch_size));
        for (std::size_t i = lo; i < hi; ++i) batch.push_back(&data[order[i]]);
        LogRecord rec;
        try {
          auto loss = batch_loss(m, batch, prompt, cfg.alpha);
          if (!std::isfinite(loss.breakdown.total)) throw NumericError("non-finite loss");
          ad::backward(loss.total);
          rec.grad_norm = global_grad_norm(active);
          clip_grad_norm(active, cfg.clip_norm);
          rec.lr = lr_at(step, sched);
          adamw_step(active, state, rec.lr);
          for (const auto& p : active) {
            auto v = p.value;
            v.zero_grad();
          }
          rec.output_loss = loss.breakdown.output_loss;
          rec.alignment_loss = loss.breakdown.alignment_loss;
          rec.total = loss.breakdown.total;
        } catch (const NumericError& err) {
          throw TrainingAborted(step, err.what());
        }
        rec.step = step;
        rec.epoch = epoch;
        rec.stage = static_cast<int>(si);
        result.log.push_back(rec);
        if (hooks.on_step) hooks.on_step(rec);
      }
      if (hooks.on_epoch_end) hooks.on_epoch_end(epoch, static_cast<int>(si), step);
    }
  }
  for (auto& p : m.parameters()) {
    auto v = p.value;
    v.set_requires_grad(false);
  }
  return result;
}

}  // namespace aumol::train
