#pragma once

#include <yaml-cpp/yaml.h>

#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "aumol/errors.hpp"
#include "aumol/model/config.hpp"
#include "aumol/train/trainer.hpp"

namespace aumol::io {

enum class DataSource { toy, manifest };

struct DataConfig {
  DataSource source = DataSource::toy;
  std::string manifest;          // required when source == manifest
  std::uint64_t toy_seed = 100;  // audio seed of toy utterance i is toy_seed + i
};

/// Everything a run needs. Missing keys keep these defaults; unknown keys
/// and invalid values are rejected together.
struct RunConfig {
  std::uint64_t seed = 0;
  model::ModelConfig model;
  train::TrainConfig train;
  train::StagePlan plan = train::StagePlan::default_plan();
  DataConfig data;
  std::string output_dir = "run";

  /// Model, trainer, plan and data invariants, each prefixed by its section.
  std::vector<std::string> violations() const {
    std::vector<std::string> out;
    for (const auto& v : model.violations()) out.push_back("model: " + v);
    for (const auto& v : train.violations()) out.push_back("train: " + v);
    for (const auto& v : plan.violations()) out.push_back("plan: " + v);
    if (data.source == DataSource::manifest && data.manifest.empty()) {
      out.push_back("data: manifest path is required when source is 'manifest'");
    }
    if (output_dir.empty()) out.push_back("output_dir must be non-empty");
    return out;
  }
};

namespace detail {

class YamlReader {
 public:
  std::vector<std::string> problems;

  void check_keys(const YAML::Node& node, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!node.IsMap()) {
      problems.push_back(where + ": expected a mapping");
      return;
    }
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& kv : node) {
      const auto key = kv.first.as<std::string>();
      if (!ok.count(key)) problems.push_back(where + "." + key + ": unknown key");
    }
  }

  template <class T>
  void get(const YAML::Node& node, const char* key, const std::string& where, T& out, const char* type) {
    const auto v = node[key];
    if (!v) return;
    try {
      out = v.as<T>();
    } catch (const YAML::Exception&) {
      problems.push_back(where + "." + key + ": expected " + type);
    }
  }
};

}  // namespace detail

inline RunConfig parse_run_config(const YAML::Node& root, const std::string& name = "config") {
  RunConfig rc;
  detail::YamlReader r;
  if (!root || root.IsNull()) return rc;
  if (!root.IsMap()) throw ConfigError(name + ": expected a mapping at top level");
  r.check_keys(root, name, {"seed", "model", "train", "plan", "data", "output_dir"});
  r.get(root, "seed", name, rc.seed, "a non-negative integer");
  r.get(root, "output_dir", name, rc.output_dir, "a string");

  if (const auto m = root["model"]) {
    const std::string w = name + ".model";
    r.check_keys(m, w,
                 {"n_mels", "d_enc", "enc_layers", "d_hidden_adapter", "d_llm", "dec_layers", "n_heads", "vocab_size",
                  "max_audio_frames", "max_text_len", "adapter_variant", "downsample_factor", "lora_rank",
                  "lora_alpha"});
    if (m.IsMap()) {
      auto& c = rc.model;
      r.get(m, "n_mels", w, c.n_mels, "an integer");
      r.get(m, "d_enc", w, c.d_enc, "an integer");
      r.get(m, "enc_layers", w, c.enc_layers, "an integer");
      r.get(m, "d_hidden_adapter", w, c.d_hidden_adapter, "an integer");
      r.get(m, "d_llm", w, c.d_llm, "an integer");
      r.get(m, "dec_layers", w, c.dec_layers, "an integer");
      r.get(m, "n_heads", w, c.n_heads, "an integer");
      r.get(m, "vocab_size", w, c.vocab_size, "an integer");
      r.get(m, "max_audio_frames", w, c.max_audio_frames, "an integer");
      r.get(m, "max_text_len", w, c.max_text_len, "an integer");
      r.get(m, "downsample_factor", w, c.downsample_factor, "an integer");
      r.get(m, "lora_rank", w, c.lora_rank, "an integer");
      r.get(m, "lora_alpha", w, c.lora_alpha, "a number");
      std::string variant;
      r.get(m, "adapter_variant", w, variant, "a string");
      if (!variant.empty()) {
        try {
          c.adapter_variant = model::adapter_variant_from_string(variant);
        } catch (const ConfigError&) {
          r.problems.push_back(w + ".adapter_variant: expected one of full, single_fc, no_relu (got '" + variant + "')");
        }
      }
    }
  }

  if (const auto t = root["train"]) {
    const std::string w = name + ".train";
    r.check_keys(t, w, {"batch_size", "warmup_steps", "base_lr", "weight_decay", "clip_norm", "alpha", "prompt"});
    if (t.IsMap()) {
      auto& c = rc.train;
      r.get(t, "batch_size", w, c.batch_size, "an integer");
      r.get(t, "warmup_steps", w, c.warmup_steps, "an integer");
      r.get(t, "base_lr", w, c.base_lr, "a number");
      r.get(t, "weight_decay", w, c.weight_decay, "a number");
      r.get(t, "clip_norm", w, c.clip_norm, "a number");
      r.get(t, "alpha", w, c.alpha, "a number");
      r.get(t, "prompt", w, c.prompt, "a string");
    }
  }

  if (const auto p = root["plan"]) {
    const std::string w = name + ".plan";
    if (!p.IsSequence()) {
      r.problems.push_back(w + ": expected a list of stages");
    } else {
      rc.plan.stages.clear();
      for (std::size_t i = 0; i < p.size(); ++i) {
        const std::string ws = w + "[" + std::to_string(i) + "]";
        const auto s = p[i];
        r.check_keys(s, ws, {"epochs", "trainable"});
        if (!s.IsMap()) continue;
        train::Stage stage;
        r.get(s, "epochs", ws, stage.epochs, "an integer");
        std::vector<std::string> names;
        r.get(s, "trainable", ws, names, "a list of component names");
        for (const auto& n : names) {
          try {
            stage.trainable.push_back(nn::component_from_string(n));
          } catch (const ConfigError&) {
            r.problems.push_back(ws + ".trainable: unknown component '" + n + "'");
          }
        }
        rc.plan.stages.push_back(std::move(stage));
      }
    }
  }

  if (const auto d = root["data"]) {
    const std::string w = name + ".data";
    r.check_keys(d, w, {"source", "manifest", "toy_seed"});
    if (d.IsMap()) {
      std::string source;
      r.get(d, "source", w, source, "a string");
      if (source == "manifest") rc.data.source = DataSource::manifest;
      else if (!source.empty() && source != "toy") r.problems.push_back(w + ".source: expected 'toy' or 'manifest'");
      r.get(d, "manifest", w, rc.data.manifest, "a string");
      r.get(d, "toy_seed", w, rc.data.toy_seed, "a non-negative integer");
    }
  }

  // A field that failed to parse keeps its default, so value checks on the
  // rest stay meaningful and everything is reported in one pass.
  for (auto& v : rc.violations()) r.problems.push_back(name + ": " + v);
  rc.train.seed = rc.seed;
  if (!r.problems.empty()) {
    std::string msg = "invalid run config:";
    for (const auto& p : r.problems) msg += "\n  - " + p;
    throw ConfigError(msg);
  }
  return rc;
}

inline RunConfig parse_run_config_text(const std::string& text, const std::string& name = "config") {
  try {
    return parse_run_config(YAML::Load(text), name);
  } catch (const YAML::Exception& e) {
    throw ConfigError(name + ": YAML syntax error: " + e.what());
  }
}

inline RunConfig load_run_config(const std::string& path) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(path);
  } catch (const YAML::BadFile&) {
    throw IoError("cannot open " + path);
  } catch (const YAML::Exception& e) {
    throw ConfigError(path + ": YAML syntax error: " + e.what());
  }
  return parse_run_config(root, path);
}

}  // namespace aumol::io
