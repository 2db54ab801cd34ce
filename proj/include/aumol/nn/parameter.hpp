#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "aumol/ad/diff_array.hpp"
#include "aumol/errors.hpp"

namespace aumol::nn {

/// Trainable groups a stage can unfreeze. `decoder` (full decoder weights)
/// exists for from-scratch toy decoders; the staged plan uses decoder_lora.
enum class Component { encoder, adapter, decoder, decoder_lora };

inline std::string_view to_string(Component c) {
  switch (c) {
    case Component::encoder:
      return "encoder";
    case Component::adapter:
      return "adapter";
    case Component::decoder:
      return "decoder";
    case Component::decoder_lora:
      return "decoder_lora";
  }
  return "?";
}

inline Component component_from_string(std::string_view s) {
  if (s == "encoder") return Component::encoder;
  if (s == "adapter") return Component::adapter;
  if (s == "decoder") return Component::decoder;
  if (s == "decoder_lora") return Component::decoder_lora;
  throw ConfigError("unknown trainable component '" + std::string(s) +
                    "' (expected adapter, encoder, decoder_lora or decoder)");
}

struct NamedParameter {
  std::string name;
  ad::DiffArray value;
  Component component;
};

/// The single seeded source of randomness for initialization.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline ad::DiffArray xavier_uniform(Rng& rng, std::size_t out, std::size_t in) {
  const double limit = std::sqrt(6.0 / static_cast<double>(in + out));
  std::vector<double> v(out * in);
  for (auto& x : v) x = rng.uniform(-limit, limit);
  return ad::DiffArray::matrix(out, in, std::move(v));
}

inline ad::DiffArray filled(std::size_t n, double value) {
  return ad::DiffArray::vector(std::vector<double>(n, value));
}

}  // namespace aumol::nn
