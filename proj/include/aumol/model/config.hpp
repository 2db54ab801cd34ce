#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aumol/errors.hpp"

namespace aumol::model {

/// full: LN(W2 ReLU(W1 x + b1) + b2). single_fc: LN(W x + b). no_relu: full
/// without the activation.
enum class AdapterVariant { full, single_fc, no_relu };

inline std::string_view to_string(AdapterVariant v) {
  switch (v) {
    case AdapterVariant::full:
      return "full";
    case AdapterVariant::single_fc:
      return "single_fc";
    case AdapterVariant::no_relu:
      return "no_relu";
  }
  return "?";
}

inline AdapterVariant adapter_variant_from_string(std::string_view s) {
  if (s == "full") return AdapterVariant::full;
  if (s == "single_fc") return AdapterVariant::single_fc;
  if (s == "no_relu") return AdapterVariant::no_relu;
  throw ConfigError("unknown adapter_variant '" + std::string(s) + "' (expected full, single_fc or no_relu)");
}

/// Defaults are the toy scale. Full scale uses d_hidden_adapter 2048,
/// d_llm 4096 and (80, 3000) input features.
struct ModelConfig {
  int n_mels = 80;
  int d_enc = 64;
  int enc_layers = 2;
  int d_hidden_adapter = 32;
  int d_llm = 48;
  int dec_layers = 2;
  int n_heads = 4;
  int vocab_size = 0;  // 0 means "take it from the vocabulary"
  int max_audio_frames = 64;
  int max_text_len = 24;
  AdapterVariant adapter_variant = AdapterVariant::full;
  int downsample_factor = 2;
  int lora_rank = 4;
  double lora_alpha = 8.0;

  static ModelConfig full_scale() {
    ModelConfig c;
    c.d_enc = 1280;
    c.enc_layers = 32;
    c.d_hidden_adapter = 2048;
    c.d_llm = 4096;
    c.dec_layers = 32;
    c.n_heads = 32;
    c.max_audio_frames = 3000;
    c.max_text_len = 448;
    return c;
  }

  int audio_positions() const { return max_audio_frames / downsample_factor; }

  /// Every violated invariant, in field order.
  std::vector<std::string> violations() const {
    std::vector<std::string> out;
    auto positive = [&](const char* name, long v) {
      if (v < 1) out.push_back(std::string(name) + " must be >= 1 (got " + std::to_string(v) + ")");
    };
    positive("n_mels", n_mels);
    positive("d_enc", d_enc);
    positive("enc_layers", enc_layers);
    positive("d_hidden_adapter", d_hidden_adapter);
    positive("d_llm", d_llm);
    positive("dec_layers", dec_layers);
    positive("n_heads", n_heads);
    positive("max_audio_frames", max_audio_frames);
    positive("max_text_len", max_text_len);
    positive("downsample_factor", downsample_factor);
    positive("lora_rank", lora_rank);
    if (vocab_size < 0) out.push_back("vocab_size must be >= 0");
    if (n_heads >= 1 && d_enc % n_heads != 0) out.push_back("n_heads must divide d_enc");
    if (n_heads >= 1 && d_llm % n_heads != 0) out.push_back("n_heads must divide d_llm");
    if (downsample_factor >= 1 && max_audio_frames >= 1 && max_audio_frames < downsample_factor) {
      out.push_back("max_audio_frames must be >= downsample_factor");
    }
    if (!(lora_alpha > 0.0)) out.push_back("lora_alpha must be > 0");
    return out;
  }

  void validate() const {
    auto v = violations();
    if (v.empty()) return;
    std::string msg = "invalid model config:";
    for (const auto& s : v) msg += "\n  - " + s;
    throw ConfigError(msg);
  }
};

inline nlohmann::json to_json(const ModelConfig& c) {
  return {{"n_mels", c.n_mels},
          {"d_enc", c.d_enc},
          {"enc_layers", c.enc_layers},
          {"d_hidden_adapter", c.d_hidden_adapter},
          {"d_llm", c.d_llm},
          {"dec_layers", c.dec_layers},
          {"n_heads", c.n_heads},
          {"vocab_size", c.vocab_size},
          {"max_audio_frames", c.max_audio_frames},
          {"max_text_len", c.max_text_len},
          {"adapter_variant", std::string(to_string(c.adapter_variant))},
          {"downsample_factor", c.downsample_factor},
          {"lora_rank", c.lora_rank},
          {"lora_alpha", c.lora_alpha}};
}

inline ModelConfig model_config_from_json(const nlohmann::json& j) {
  ModelConfig c;
  try {
    c.n_mels = j.at("n_mels").get<int>();
    c.d_enc = j.at("d_enc").get<int>();
    c.enc_layers = j.at("enc_layers").get<int>();
    c.d_hidden_adapter = j.at("d_hidden_adapter").get<int>();
    c.d_llm = j.at("d_llm").get<int>();
    c.dec_layers = j.at("dec_layers").get<int>();
    c.n_heads = j.at("n_heads").get<int>();
    c.vocab_size = j.at("vocab_size").get<int>();
    c.max_audio_frames = j.at("max_audio_frames").get<int>();
    c.max_text_len = j.at("max_text_len").get<int>();
    c.adapter_variant = adapter_variant_from_string(j.at("adapter_variant").get<std::string>());
    c.downsample_factor = j.at("downsample_factor").get<int>();
    c.lora_rank = j.at("lora_rank").get<int>();
    c.lora_alpha = j.at("lora_alpha").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("model config snapshot: ") + e.what());
  }
  return c;
}

/// Name of the first field where a and b differ, or empty when equal.
inline std::string first_difference(const ModelConfig& a, const ModelConfig& b) {
  const auto ja = to_json(a);
  const auto jb = to_json(b);
  for (auto it = ja.begin(); it != ja.end(); ++it) {
    if (jb.at(it.key()) != it.value()) return it.key();
  }
  return {};
}

}  // namespace aumol::model
