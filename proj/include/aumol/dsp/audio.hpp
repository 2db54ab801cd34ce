#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "aumol/errors.hpp"

namespace aumol::dsp {

inline constexpr int kTargetSampleRate = 16000;

/// Mono waveform with amplitudes nominally in [-1, 1].
struct AudioBuffer {
  std::vector<double> samples;
  int sample_rate_hz = kTargetSampleRate;

  double duration_s() const { return static_cast<double>(samples.size()) / sample_rate_hz; }

  /// Throws EmptyAudio / InvalidAudio when the buffer violates its invariants.
  void validate() const {
    if (sample_rate_hz <= 0) throw InvalidAudio("sample rate must be positive, got " + std::to_string(sample_rate_hz));
    if (samples.empty()) throw EmptyAudio("audio buffer has no samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (!std::isfinite(samples[i])) throw InvalidAudio("non-finite sample at index " + std::to_string(i));
    }
  }
};

namespace detail {

inline double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

}  // namespace detail

/// Band-limited resampling with a Hann-windowed sinc kernel. The kernel's
/// cutoff is the lower of the two Nyquist frequencies, so nothing above the
/// output Nyquist survives a downsample.
inline AudioBuffer resample(const AudioBuffer& audio, int target_hz, int zero_crossings = 16) {
  audio.validate();
  if (target_hz <= 0) throw InvalidConfig("target sample rate must be positive, got " + std::to_string(target_hz));
  if (target_hz == audio.sample_rate_hz) return audio;

  const auto src = static_cast<std::int64_t>(audio.sample_rate_hz);
  const auto dst = static_cast<std::int64_t>(target_hz);
  const auto n_in = static_cast<std::int64_t>(audio.samples.size());
  const std::int64_t n_out = (n_in * dst + src - 1) / src;

  const double step = static_cast<double>(src) / static_cast<double>(dst);  // input samples per output sample
  const double cutoff = std::min(1.0, static_cast<double>(dst) / static_cast<double>(src));
  const double half_width = zero_crossings / cutoff;

  AudioBuffer out;
  out.sample_rate_hz = target_hz;
  out.samples.resize(static_cast<std::size_t>(n_out));
  for (std::int64_t j = 0; j < n_out; ++j) {
    const double t = static_cast<double>(j) * step;
    const auto lo = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(t - half_width)));
    const auto hi = std::min<std::int64_t>(n_in - 1, static_cast<std::int64_t>(std::floor(t + half_width)));
    double acc = 0.0;
    for (std::int64_t k = lo; k <= hi; ++k) {
      const double d = t - static_cast<double>(k);
      const double window = 0.5 * (1.0 + std::cos(std::numbers::pi * d / half_width));
      acc += audio.samples[static_cast<std::size_t>(k)] * cutoff * detail::sinc(cutoff * d) * window;
    }
    out.samples[static_cast<std::size_t>(j)] = acc;
  }
  return out;
}

}  // namespace aumol::dsp
