#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aumol/ad/ops.hpp"
#include "aumol/dsp/features.hpp"
#include "aumol/model/config.hpp"
#include "aumol/model/vocab.hpp"
#include "aumol/nn/blocks.hpp"

namespace aumol::model {

using ad::DiffArray;

enum class Modality { audio, text };

struct EmbeddingSeq {
  DiffArray values;  // T x d
  Modality modality = Modality::audio;

  std::size_t length() const { return values.shape()[0]; }
  std::size_t dim() const { return values.shape()[1]; }
};

struct AdapterParams {
  nn::Linear fc1;                 // d_enc -> d_hidden_adapter (single_fc: d_enc -> d_llm)
  std::optional<nn::Linear> fc2;  // d_hidden_adapter -> d_llm; absent for single_fc
  DiffArray ln_gain, ln_bias;     // d_llm
};

/// Prompt tokens a decoder position table reserves room for.
inline constexpr int kMaxPromptTokens = 16;

struct Model {
  ModelConfig cfg;
  Vocabulary vocab;

  nn::Linear enc_in;
  nn::PositionalEncoding enc_pos;
  std::vector<nn::TransformerBlock> enc_blocks;
  DiffArray enc_ln_gain, enc_ln_bias;

  AdapterParams adapter;

  DiffArray tok_embed;  // vocab x d_llm
  nn::PositionalEncoding dec_pos;
  std::vector<nn::TransformerBlock> dec_blocks;  // W_q / W_v carry LoRA adapters
  DiffArray dec_ln_gain, dec_ln_bias;
  nn::Linear lm_head;  // d_llm -> vocab, untied from tok_embed

  int decoder_positions() const { return cfg.audio_positions() + kMaxPromptTokens + 1 + cfg.max_text_len; }

  /// Every tensor once, in a fixed order; names are checkpoint keys.
  std::vector<nn::NamedParameter> parameters() const {
    using nn::Component;
    std::vector<nn::NamedParameter> out;
    enc_in.collect("encoder.input", Component::encoder, out);
    out.push_back({"encoder.positions", enc_pos.table, Component::encoder});
    for (std::size_t i = 0; i < enc_blocks.size(); ++i) {
      enc_blocks[i].collect("encoder.block" + std::to_string(i), Component::encoder, out);
    }
    out.push_back({"encoder.ln.gain", enc_ln_gain, Component::encoder});
    out.push_back({"encoder.ln.bias", enc_ln_bias, Component::encoder});
    adapter.fc1.collect("adapter.fc1", Component::adapter, out);
    if (adapter.fc2) adapter.fc2->collect("adapter.fc2", Component::adapter, out);
    out.push_back({"adapter.ln.gain", adapter.ln_gain, Component::adapter});
    out.push_back({"adapter.ln.bias", adapter.ln_bias, Component::adapter});
    out.push_back({"decoder.tokens", tok_embed, Component::decoder});
    out.push_back({"decoder.positions", dec_pos.table, Component::decoder});
    for (std::size_t i = 0; i < dec_blocks.size(); ++i) {
      dec_blocks[i].collect("decoder.block" + std::to_string(i), Component::decoder, out);
    }
    out.push_back({"decoder.ln.gain", dec_ln_gain, Component::decoder});
    out.push_back({"decoder.ln.bias", dec_ln_bias, Component::decoder});
    lm_head.collect("decoder.lm_head", Component::decoder, out);
    return out;
  }

  static Model init(ModelConfig cfg, std::uint64_t seed) {
    Model m;
    if (cfg.vocab_size == 0) cfg.vocab_size = m.vocab.size();
    cfg.validate();
    if (cfg.vocab_size != m.vocab.size()) {
      throw ConfigError("vocab_size " + std::to_string(cfg.vocab_size) + " does not match the " +
                        std::to_string(m.vocab.size()) + "-symbol vocabulary");
    }
    m.cfg = cfg;
    nn::Rng rng(seed);
    const auto d_enc = static_cast<std::size_t>(cfg.d_enc);
    const auto d_llm = static_cast<std::size_t>(cfg.d_llm);
    const auto vocab = static_cast<std::size_t>(cfg.vocab_size);

    m.enc_in = nn::Linear::init(rng, static_cast<std::size_t>(cfg.n_mels), d_enc);
    m.enc_pos = nn::sinusoidal_positions(static_cast<std::size_t>(cfg.max_audio_frames), d_enc);
    for (int i = 0; i < cfg.enc_layers; ++i) m.enc_blocks.push_back(nn::TransformerBlock::init(rng, d_enc, cfg.n_heads));
    m.enc_ln_gain = nn::filled(d_enc, 1.0);
    m.enc_ln_bias = nn::filled(d_enc, 0.0);

    if (cfg.adapter_variant == AdapterVariant::single_fc) {
      m.adapter.fc1 = nn::Linear::init(rng, d_enc, d_llm);
    } else {
      const auto hidden = static_cast<std::size_t>(cfg.d_hidden_adapter);
      m.adapter.fc1 = nn::Linear::init(rng, d_enc, hidden);
      m.adapter.fc2 = nn::Linear::init(rng, hidden, d_llm);
    }
    m.adapter.ln_gain = nn::filled(d_llm, 1.0);
    m.adapter.ln_bias = nn::filled(d_llm, 0.0);

    m.tok_embed = nn::xavier_uniform(rng, vocab, d_llm);
    m.dec_pos = nn::sinusoidal_positions(static_cast<std::size_t>(m.decoder_positions()), d_llm);
    for (int i = 0; i < cfg.dec_layers; ++i) {
      auto block = nn::TransformerBlock::init(rng, d_llm, cfg.n_heads);
      block.attn.lora_q = nn::LoraAdapter::init(rng, d_llm, d_llm, cfg.lora_rank, cfg.lora_alpha);
      block.attn.lora_v = nn::LoraAdapter::init(rng, d_llm, d_llm, cfg.lora_rank, cfg.lora_alpha);
      m.dec_blocks.push_back(std::move(block));
    }
    m.dec_ln_gain = nn::filled(d_llm, 1.0);
    m.dec_ln_bias = nn::filled(d_llm, 0.0);
    m.lm_head = nn::Linear::init(rng, d_llm, vocab);
    return m;
  }
};

inline DiffArray to_diff(const Eigen::MatrixXd& m) {
  std::vector<double> v(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) v[static_cast<std::size_t>(r * m.cols() + c)] = m(r, c);
  return DiffArray::matrix(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()), std::move(v));
}

/// (T_out x T_in) matrix averaging non-overlapping windows of `factor` rows;
/// a trailing partial window is dropped.
inline DiffArray mean_pool_matrix(std::size_t t_in, std::size_t factor) {
  const std::size_t t_out = t_in / factor;
  std::vector<double> v(t_out * t_in, 0.0);
  for (std::size_t o = 0; o < t_out; ++o)
    for (std::size_t k = 0; k < factor; ++k) v[o * t_in + o * factor + k] = 1.0 / static_cast<double>(factor);
  return DiffArray::matrix(t_out, t_in, std::move(v));
}

/// features (n_mels x n_frames) -> (n_frames / downsample_factor x d_enc).
inline EmbeddingSeq encode_audio(const Model& m, const DiffArray& features) {
  const auto& cfg = m.cfg;
  if (features.ndim() != 2 || features.shape()[0] != static_cast<std::size_t>(cfg.n_mels)) {
    throw ShapeError("encode_audio: features " + ad::shape_str(features.shape()) + " but n_mels is " +
                     std::to_string(cfg.n_mels));
  }
  const std::size_t frames = features.shape()[1];
  if (frames > static_cast<std::size_t>(cfg.max_audio_frames)) {
    throw ContractError("encode_audio: " + std::to_string(frames) + " frames exceed max_audio_frames " +
                        std::to_string(cfg.max_audio_frames));
  }
  const auto factor = static_cast<std::size_t>(cfg.downsample_factor);
  if (frames < factor) {
    throw ContractError("encode_audio: " + std::to_string(frames) + " frames shorter than downsample_factor");
  }
  auto h = m.enc_pos.add_to(m.enc_in(ad::transpose(features)));
  for (const auto& block : m.enc_blocks) h = nn::transformer_block(h, block, false);
  h = ad::layer_norm(h, m.enc_ln_gain, m.enc_ln_bias);
  if (factor > 1) h = ad::matmul(mean_pool_matrix(frames, factor), h);
  return {h, Modality::audio};
}

inline EmbeddingSeq encode_audio(const Model& m, const dsp::LogMelFeatures& features) {
  return encode_audio(m, to_diff(features.values));
}

inline EmbeddingSeq adapt(const EmbeddingSeq& audio, const AdapterParams& p, AdapterVariant variant) {
  if (audio.dim() != p.fc1.in_features()) {
    throw ShapeError("adapt: input width " + std::to_string(audio.dim()) + " but adapter expects " +
                     std::to_string(p.fc1.in_features()));
  }
  DiffArray h = p.fc1(audio.values);
  if (variant != AdapterVariant::single_fc) {
    if (!p.fc2) throw ShapeError("adapt: two-layer variant needs fc2");
    if (variant == AdapterVariant::full) h = ad::relu(h);
    h = (*p.fc2)(h);
  }
  return {ad::layer_norm(h, p.ln_gain, p.ln_bias), Modality::audio};
}

inline EmbeddingSeq embed_tokens(const Model& m, std::span<const std::int32_t> ids) {
  for (auto t : ids) {
    if (t < 0 || t >= m.cfg.vocab_size) throw ContractError("token id " + std::to_string(t) + " outside vocabulary");
  }
  return {ad::embedding_lookup(m.tok_embed, ids), Modality::text};
}

struct DecoderInput {
  EmbeddingSeq combined;
  std::vector<std::int32_t> labels;  // per position; meaningful where mask is 1
  std::vector<std::uint8_t> mask;
  std::size_t audio_len = 0;
  std::size_t prompt_len = 0;

  std::size_t label_count() const {
    std::size_t n = 0;
    for (auto v : mask) n += v;
    return n;
  }
};

/// [audio | embed(prompt) | embed(BOS + target)]. Position audio+prompt+k
/// predicts target[k], so every target token carries one label.
inline DecoderInput build_decoder_input(const Model& m, const EmbeddingSeq& audio, std::span<const std::int32_t> prompt,
                                        std::span<const std::int32_t> target) {
  if (audio.dim() != static_cast<std::size_t>(m.cfg.d_llm)) {
    throw ShapeError("build_decoder_input: audio width " + std::to_string(audio.dim()) + " vs d_llm " +
                     std::to_string(m.cfg.d_llm));
  }
  const std::size_t total = audio.length() + prompt.size() + 1 + target.size();
  if (total > m.dec_pos.max_len()) {
    throw ContractError("decoder input of " + std::to_string(total) + " positions exceeds " +
                        std::to_string(m.dec_pos.max_len()));
  }
  std::vector<std::int32_t> text(prompt.begin(), prompt.end());
  text.push_back(Vocabulary::kBos);
  text.insert(text.end(), target.begin(), target.end());
  DecoderInput in;
  in.audio_len = audio.length();
  in.prompt_len = prompt.size();
  in.combined = {ad::concat({audio.values, embed_tokens(m, text).values}, 0), Modality::text};
  in.labels.assign(total, Vocabulary::kPad);
  in.mask.assign(total, 0);
  const std::size_t first = in.audio_len + in.prompt_len;
  for (std::size_t k = 0; k < target.size(); ++k) {
    in.labels[first + k] = target[k];
    in.mask[first + k] = 1;
  }
  return in;
}

/// Causal decoder over the combined sequence; logits (T x vocab).
inline DiffArray decoder_forward(const Model& m, const EmbeddingSeq& combined) {
  if (combined.dim() != static_cast<std::size_t>(m.cfg.d_llm)) {
    throw ShapeError("decoder_forward: width " + std::to_string(combined.dim()) + " vs d_llm " +
                     std::to_string(m.cfg.d_llm));
  }
  auto h = m.dec_pos.add_to(combined.values);
  for (const auto& block : m.dec_blocks) h = nn::transformer_block(h, block, true);
  return m.lm_head(ad::layer_norm(h, m.dec_ln_gain, m.dec_ln_bias));
}

inline std::vector<std::int32_t> prompt_ids(const Model& m, std::string_view prompt) {
  auto ids = m.vocab.encode(prompt);
  if (ids.size() > static_cast<std::size_t>(kMaxPromptTokens)) {
    throw ContractError("prompt longer than " + std::to_string(kMaxPromptTokens) + " tokens");
  }
  return ids;
}

/// Frontend sized to the model: 80-bin log-Mel padded to max_audio_frames.
inline dsp::Frontend frontend_for(const ModelConfig& cfg) {
  dsp::Frontend f;
  if (cfg.n_mels != f.filterbank.n_mels) {
    f.filterbank = dsp::build_mel_filterbank(cfg.n_mels, f.stft.n_fft, dsp::kTargetSampleRate, 0.0,
                                             dsp::kTargetSampleRate / 2.0);
  }
  f.target_frames = cfg.max_audio_frames;
  return f;
}

/// Argmax decoding from BOS until EOS or max_text_len tokens.
inline std::vector<std::int32_t> greedy_decode(const Model& m, const dsp::LogMelFeatures& features,
                                               std::string_view prompt = kDefaultPrompt) {
  const auto audio = adapt(encode_audio(m, features), m.adapter, m.cfg.adapter_variant);
  const auto prompt_tokens = prompt_ids(m, prompt);
  std::vector<std::int32_t> out;
  const auto vocab = static_cast<std::size_t>(m.cfg.vocab_size);
  while (out.size() < static_cast<std::size_t>(m.cfg.max_text_len)) {
    auto in = build_decoder_input(m, audio, prompt_tokens, out);
    auto logits = decoder_forward(m, in.combined);
    const std::size_t row = in.combined.length() - 1;
    std::int32_t best = 0;
    for (std::size_t v = 1; v < vocab; ++v) {
      if (logits.at(row, v) > logits.at(row, static_cast<std::size_t>(best))) best = static_cast<std::int32_t>(v);
    }
    if (best == Vocabulary::kEos) break;
    out.push_back(best);
  }
  return out;
}

inline std::string greedy_transcribe(const dsp::AudioBuffer& audio, const Model& m,
                                     std::string_view prompt = kDefaultPrompt) {
  return m.vocab.decode(greedy_decode(m, frontend_for(m.cfg)(audio), prompt));
}

}  // namespace aumol::model
