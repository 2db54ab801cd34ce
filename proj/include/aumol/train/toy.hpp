#pragma once

#include <cstdint>
#include <vector>

#include "aumol/data/synth.hpp"
#include "aumol/train/trainer.hpp"

namespace aumol::train {

/// Audio seed of toy utterance i is base_seed + i.
inline std::vector<Example> toy_examples(const model::Model& m, std::uint64_t base_seed = 100) {
  const auto frontend = model::frontend_for(m.cfg);
  std::vector<Example> out;
  std::uint64_t i = 0;
  for (const auto& u : data::toy_corpus()) {
    out.push_back(make_example(m, u.id, frontend(data::synth_utterance(u.transcript, base_seed + i++)), u.transcript));
  }
  return out;
}

/// All-components, full-batch plan used to overfit the toy corpus.
inline StagePlan overfit_plan(int steps) {
  return {{{steps, {nn::Component::adapter, nn::Component::encoder, nn::Component::decoder}}}};
}

inline TrainConfig overfit_config(int steps) {
  TrainConfig c;
  c.batch_size = 8;
  c.base_lr = 1e-3;
  c.warmup_steps = steps / 10;
  c.seed = 1;
  return c;
}

}  // namespace aumol::train
