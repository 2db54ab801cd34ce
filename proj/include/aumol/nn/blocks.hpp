#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "aumol/ad/ops.hpp"
#include "aumol/nn/parameter.hpp"

namespace aumol::nn {

using ad::DiffArray;

/// y = x W^T + b with W stored (out x in).
struct Linear {
  DiffArray weight;
  DiffArray bias;

  static Linear init(Rng& rng, std::size_t in, std::size_t out) {
    return {xavier_uniform(rng, out, in), filled(out, 0.0)};
  }
  std::size_t in_features() const { return weight.shape()[1]; }
  std::size_t out_features() const { return weight.shape()[0]; }

  DiffArray operator()(const DiffArray& x) const { return ad::add_row(ad::matmul_t(x, weight), bias); }

  void collect(const std::string& prefix, Component c, std::vector<NamedParameter>& out) const {
    out.push_back({prefix + ".weight", weight, c});
    out.push_back({prefix + ".bias", bias, c});
  }
};

/// Low-rank delta scale * B A added to a frozen base weight. B starts at
/// zero, so a fresh adapter leaves the host layer unchanged.
struct LoraAdapter {
  DiffArray a;  // r x d_in
  DiffArray b;  // d_out x r
  int rank = 0;
  double scale = 0.0;

  static LoraAdapter init(Rng& rng, std::size_t d_in, std::size_t d_out, int rank, double lora_alpha) {
    if (rank < 1) throw ConfigError("LoRA rank must be >= 1");
    return {xavier_uniform(rng, static_cast<std::size_t>(rank), d_in),
            DiffArray::zeros({d_out, static_cast<std::size_t>(rank)}), rank, lora_alpha / rank};
  }

  void collect(const std::string& prefix, std::vector<NamedParameter>& out) const {
    out.push_back({prefix + ".lora_a", a, Component::decoder_lora});
    out.push_back({prefix + ".lora_b", b, Component::decoder_lora});
  }
};

/// x W_base^T + scale * (x A^T) B^T
inline DiffArray lora_forward(const DiffArray& x, const DiffArray& w_base, const LoraAdapter& adapter) {
  if (adapter.a.shape()[1] != w_base.shape()[1] || adapter.b.shape()[0] != w_base.shape()[0]) {
    throw ShapeError("lora_forward: adapter A " + ad::shape_str(adapter.a.shape()) + " / B " +
                     ad::shape_str(adapter.b.shape()) + " do not fit base weight " + ad::shape_str(w_base.shape()));
  }
  auto base = ad::matmul_t(x, w_base);
  auto delta = ad::matmul_t(ad::matmul_t(x, adapter.a), adapter.b);
  return ad::add(base, ad::scale(delta, adapter.scale));
}

inline DiffArray project(const DiffArray& x, const DiffArray& w, const std::optional<LoraAdapter>& lora) {
  return lora ? lora_forward(x, w, *lora) : ad::matmul_t(x, w);
}

struct AttentionParams {
  DiffArray w_q, w_k, w_v, w_o;  // d_model x d_model
  int n_heads = 1;
  std::optional<LoraAdapter> lora_q;
  std::optional<LoraAdapter> lora_v;

  static AttentionParams init(Rng& rng, std::size_t d_model, int n_heads) {
    if (n_heads < 1 || d_model % static_cast<std::size_t>(n_heads) != 0) {
      throw ConfigError("n_heads (" + std::to_string(n_heads) + ") must divide d_model (" + std::to_string(d_model) +
                        ")");
    }
    AttentionParams p;
    p.w_q = xavier_uniform(rng, d_model, d_model);
    p.w_k = xavier_uniform(rng, d_model, d_model);
    p.w_v = xavier_uniform(rng, d_model, d_model);
    p.w_o = xavier_uniform(rng, d_model, d_model);
    p.n_heads = n_heads;
    return p;
  }
  std::size_t d_model() const { return w_q.shape()[0]; }

  void collect(const std::string& prefix, Component c, std::vector<NamedParameter>& out) const {
    out.push_back({prefix + ".w_q", w_q, c});
    out.push_back({prefix + ".w_k", w_k, c});
    out.push_back({prefix + ".w_v", w_v, c});
    out.push_back({prefix + ".w_o", w_o, c});
    if (lora_q) lora_q->collect(prefix + ".q", out);
    if (lora_v) lora_v->collect(prefix + ".v", out);
  }
};

/// Scaled dot-product attention per head, heads concatenated then projected
/// by W_o. x is (T x d_model).
inline DiffArray multi_head_attention(const DiffArray& x, const AttentionParams& p, bool causal) {
  const std::size_t d = p.d_model();
  if (x.ndim() != 2 || x.shape()[1] != d) {
    throw ShapeError("multi_head_attention: input " + ad::shape_str(x.shape()) + " vs d_model " + std::to_string(d));
  }
  const auto heads = static_cast<std::size_t>(p.n_heads);
  const std::size_t dh = d / heads;
  const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(dh));
  auto q = project(x, p.w_q, p.lora_q);
  auto k = ad::matmul_t(x, p.w_k);
  auto v = project(x, p.w_v, p.lora_v);
  std::vector<DiffArray> outs;
  outs.reserve(heads);
  for (std::size_t h = 0; h < heads; ++h) {
    auto qh = ad::slice_cols(q, h * dh, (h + 1) * dh);
    auto kh = ad::slice_cols(k, h * dh, (h + 1) * dh);
    auto vh = ad::slice_cols(v, h * dh, (h + 1) * dh);
    auto weights = ad::softmax(ad::scale(ad::matmul_t(qh, kh), inv_sqrt), causal);
    outs.push_back(ad::matmul(weights, vh));
  }
  auto merged = heads == 1 ? outs.front() : ad::concat(outs, 1);
  return ad::matmul_t(merged, p.w_o);
}

/// Pre-norm block: h = x + Attn(LN(x)); y = h + W2 ReLU(W1 LN(h)).
struct TransformerBlock {
  DiffArray ln1_gain, ln1_bias;
  AttentionParams attn;
  DiffArray ln2_gain, ln2_bias;
  Linear ffn_in;   // d -> 4d
  Linear ffn_out;  // 4d -> d

  static TransformerBlock init(Rng& rng, std::size_t d_model, int n_heads) {
    TransformerBlock b;
    b.ln1_gain = filled(d_model, 1.0);
    b.ln1_bias = filled(d_model, 0.0);
    b.attn = AttentionParams::init(rng, d_model, n_heads);
    b.ln2_gain = filled(d_model, 1.0);
    b.ln2_bias = filled(d_model, 0.0);
    b.ffn_in = Linear::init(rng, d_model, 4 * d_model);
    b.ffn_out = Linear::init(rng, 4 * d_model, d_model);
    return b;
  }

  void collect(const std::string& prefix, Component c, std::vector<NamedParameter>& out) const {
    out.push_back({prefix + ".ln1.gain", ln1_gain, c});
    out.push_back({prefix + ".ln1.bias", ln1_bias, c});
    attn.collect(prefix + ".attn", c, out);
    out.push_back({prefix + ".ln2.gain", ln2_gain, c});
    out.push_back({prefix + ".ln2.bias", ln2_bias, c});
    ffn_in.collect(prefix + ".ffn_in", c, out);
    ffn_out.collect(prefix + ".ffn_out", c, out);
  }
};

inline DiffArray transformer_block(const DiffArray& x, const TransformerBlock& b, bool causal) {
  auto h = ad::add(x, multi_head_attention(ad::layer_norm(x, b.ln1_gain, b.ln1_bias), b.attn, causal));
  auto ff = b.ffn_out(ad::relu(b.ffn_in(ad::layer_norm(h, b.ln2_gain, b.ln2_bias))));
  return ad::add(h, ff);
}

/// Sinusoid-initialized position table; trainable unless frozen by the owner.
struct PositionalEncoding {
  DiffArray table;  // max_len x d_model
  bool trainable = true;

  std::size_t max_len() const { return table.shape()[0]; }

  /// x (T x d) plus rows [0, T) of the table.
  DiffArray add_to(const DiffArray& x) const {
    if (x.shape()[0] > max_len()) {
      throw ContractError("sequence of length " + std::to_string(x.shape()[0]) + " exceeds " +
                          std::to_string(max_len()) + " positions");
    }
    return ad::add(x, ad::slice_rows(table, 0, x.shape()[0]));
  }
};

/// table[p][2i] = sin(p / 10000^(2i/d)), table[p][2i+1] = cos(same angle).
inline PositionalEncoding sinusoidal_positions(std::size_t max_len, std::size_t d_model) {
  if (max_len < 1 || d_model < 1) throw ConfigError("positional table needs max_len, d_model >= 1");
  std::vector<double> v(max_len * d_model);
  for (std::size_t p = 0; p < max_len; ++p) {
    for (std::size_t c = 0; c < d_model; ++c) {
      const std::size_t pair = c / 2;
      const double angle =
          static_cast<double>(p) / std::pow(10000.0, 2.0 * static_cast<double>(pair) / static_cast<double>(d_model));
      v[p * d_model + c] = c % 2 == 0 ? std::sin(angle) : std::cos(angle);
    }
  }
  return {DiffArray::matrix(max_len, d_model, std::move(v)), true};
}

}  // namespace aumol::nn
