#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "aumol/dsp/audio.hpp"
#include "aumol/model/vocab.hpp"

namespace aumol::data {

struct SynthConfig {
  double char_ms = 45.0;
  double gap_ms = 5.0;
  double lead_ms = 20.0;
  double amplitude = 0.4;
  double noise = 0.01;
};

/// Tone frequency for a character: alphabet position i -> 150 + 180 i Hz,
/// which keeps every symbol below the 8 kHz Nyquist limit.
inline double tone_hz(char c) {
  const auto pos = model::Vocabulary::kAlphabet.find(c);
  const double i = pos == std::string_view::npos ? 0.0 : static_cast<double>(pos);
  return 150.0 + 180.0 * i;
}

/// One Hann-tapered tone per character, separated by short silences, plus
/// seeded white noise.
inline dsp::AudioBuffer synth_utterance(std::string_view text, std::uint64_t seed, const SynthConfig& cfg = {}) {
  const double sr = dsp::kTargetSampleRate;
  const auto per_char = static_cast<std::size_t>(cfg.char_ms * sr / 1000.0);
  const auto gap = static_cast<std::size_t>(cfg.gap_ms * sr / 1000.0);
  const auto lead = static_cast<std::size_t>(cfg.lead_ms * sr / 1000.0);
  dsp::AudioBuffer out;
  out.sample_rate_hz = dsp::kTargetSampleRate;
  out.samples.assign(2 * lead + text.size() * (per_char + gap), 0.0);
  for (std::size_t k = 0; k < text.size(); ++k) {
    const double f = tone_hz(text[k]);
    const std::size_t start = lead + k * (per_char + gap);
    for (std::size_t n = 0; n < per_char; ++n) {
      const double taper = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(n) /
                                                static_cast<double>(per_char - 1));
      out.samples[start + n] = cfg.amplitude * taper * std::sin(2.0 * std::numbers::pi * f * static_cast<double>(n) / sr);
    }
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, cfg.noise);
  for (auto& s : out.samples) s += noise(rng);
  return out;
}

struct ToyUtterance {
  std::string id;
  std::string transcript;
};

/// Fixed eight-utterance corpus; every clip fits in 64 frames.
inline std::vector<ToyUtterance> toy_corpus() {
  return {{"toy-0", "take two"}, {"toy-1", "dose one"}, {"toy-2", "stop now"}, {"toy-3", "give ten"},
          {"toy-4", "rest"},     {"toy-5", "pain low"}, {"toy-6", "call me"},  {"toy-7", "mg 16"}};
}

}  // namespace aumol::data
