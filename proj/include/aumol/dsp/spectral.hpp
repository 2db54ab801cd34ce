#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "aumol/dsp/audio.hpp"
#include "aumol/errors.hpp"

namespace aumol::dsp {

enum class WindowFn { hann_periodic, hann_symmetric, rectangular };

struct StftConfig {
  double window_ms = 25.0;
  double hop_ms = 10.0;
  int n_fft = 400;
  WindowFn window_fn = WindowFn::hann_periodic;

  int window_samples(int sample_rate_hz) const {
    return static_cast<int>(std::lround(window_ms * sample_rate_hz / 1000.0));
  }
  int hop_samples(int sample_rate_hz) const { return static_cast<int>(std::lround(hop_ms * sample_rate_hz / 1000.0)); }
  int n_bins() const { return n_fft / 2 + 1; }

  void validate(int sample_rate_hz) const {
    if (window_ms <= 0.0 || hop_ms <= 0.0) throw InvalidConfig("STFT window and hop must be positive");
    if (hop_ms > window_ms) throw InvalidConfig("STFT hop must not exceed the window");
    if (hop_samples(sample_rate_hz) < 1) throw InvalidConfig("STFT hop is shorter than one sample");
    if (n_fft < window_samples(sample_rate_hz)) {
      throw InvalidConfig("n_fft " + std::to_string(n_fft) + " is shorter than the " +
                          std::to_string(window_samples(sample_rate_hz)) + "-sample window");
    }
  }
};

inline std::vector<double> make_window(WindowFn fn, int length) {
  std::vector<double> w(static_cast<std::size_t>(length), 1.0);
  if (fn == WindowFn::rectangular || length == 1) return w;
  const double denom = fn == WindowFn::hann_periodic ? length : length - 1;
  for (int i = 0; i < length; ++i) w[static_cast<std::size_t>(i)] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / denom);
  return w;
}

namespace detail {

// Index into a signal of length n after reflective extension (no edge repeat).
inline std::size_t reflect_index(std::ptrdiff_t i, std::ptrdiff_t n) {
  if (n == 1) return 0;
  const std::ptrdiff_t period = 2 * (n - 1);
  i %= period;
  if (i < 0) i += period;
  return static_cast<std::size_t>(i < n ? i : period - i);
}

}  // namespace detail

/// Magnitude STFT, shape (n_fft/2 + 1) x n_frames with
/// n_frames = floor(num_samples / hop). Frames are centered on multiples of
/// the hop; the signal is reflect-padded by n_fft/2 on both sides.
inline Eigen::MatrixXd frame_stft(const AudioBuffer& audio, const StftConfig& cfg) {
  audio.validate();
  const int sr = audio.sample_rate_hz;
  cfg.validate(sr);
  const int hop = cfg.hop_samples(sr);
  const int win = cfg.window_samples(sr);
  const auto len = static_cast<std::ptrdiff_t>(audio.samples.size());
  if (len < hop) {
    throw ShortAudio("audio of " + std::to_string(len) + " samples is shorter than one hop (" + std::to_string(hop) +
                     ")");
  }
  const auto n_frames = static_cast<Eigen::Index>(len / hop);
  const int n_fft = cfg.n_fft;
  const int n_bins = cfg.n_bins();
  const int pad = n_fft / 2;
  const int win_offset = (n_fft - win) / 2;

  std::vector<double> window(static_cast<std::size_t>(n_fft), 0.0);
  const auto w = make_window(cfg.window_fn, win);
  for (int i = 0; i < win; ++i) window[static_cast<std::size_t>(win_offset + i)] = w[static_cast<std::size_t>(i)];

  Eigen::MatrixXd frames(n_frames, n_fft);
  for (Eigen::Index t = 0; t < n_frames; ++t) {
    const std::ptrdiff_t start = static_cast<std::ptrdiff_t>(t) * hop - pad;
    for (int k = 0; k < n_fft; ++k) {
      frames(t, k) = audio.samples[detail::reflect_index(start + k, len)] * window[static_cast<std::size_t>(k)];
    }
  }

  // Real DFT as two GEMMs against a cos/sin basis.
  Eigen::MatrixXd cos_basis(n_fft, n_bins), sin_basis(n_fft, n_bins);
  for (int n = 0; n < n_fft; ++n) {
    for (int k = 0; k < n_bins; ++k) {
      const long phase_index = (static_cast<long>(n) * k) % n_fft;
      const double phase = 2.0 * std::numbers::pi * static_cast<double>(phase_index) / n_fft;
      cos_basis(n, k) = std::cos(phase);
      sin_basis(n, k) = -std::sin(phase);
    }
  }
  const Eigen::MatrixXd re = frames * cos_basis;
  const Eigen::MatrixXd im = frames * sin_basis;
  return (re.array().square() + im.array().square()).sqrt().matrix().transpose();
}

inline double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
inline double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

/// Triangular filters over the one-sided power spectrum, rows ordered by
/// ascending center frequency.
struct MelFilterbank {
  Eigen::MatrixXd weights;  // n_mels x (n_fft/2 + 1)
  int n_mels = 0;
  int n_fft = 0;
  int sample_rate_hz = 0;
  double f_min = 0.0;
  double f_max = 0.0;
  std::vector<double> centers_hz;

  Eigen::MatrixXd apply(const Eigen::MatrixXd& power) const { return weights * power; }
};

/// Filter m rises from mel point m to m+1 and falls to m+2, with n_mels + 2
/// points equally spaced on the mel scale over [f_min, f_max]. A filter too
/// narrow to contain an FFT bin falls back to the bin nearest its center.
inline MelFilterbank build_mel_filterbank(int n_mels, int n_fft, int sample_rate_hz, double f_min, double f_max) {
  if (n_mels < 1) throw InvalidConfig("n_mels must be >= 1");
  if (n_fft < 2) throw InvalidConfig("n_fft must be >= 2");
  if (sample_rate_hz <= 0) throw InvalidConfig("sample rate must be positive");
  if (!(f_min >= 0.0) || !(f_min < f_max) || f_max > sample_rate_hz / 2.0) {
    throw InvalidConfig("mel bounds must satisfy 0 <= f_min < f_max <= sample_rate/2, got f_min=" +
                        std::to_string(f_min) + " f_max=" + std::to_string(f_max));
  }
  const int n_bins = n_fft / 2 + 1;
  MelFilterbank fb;
  fb.n_mels = n_mels;
  fb.n_fft = n_fft;
  fb.sample_rate_hz = sample_rate_hz;
  fb.f_min = f_min;
  fb.f_max = f_max;
  fb.weights = Eigen::MatrixXd::Zero(n_mels, n_bins);

  const double mel_lo = hz_to_mel(f_min), mel_hi = hz_to_mel(f_max);
  std::vector<double> edges(static_cast<std::size_t>(n_mels + 2));
  for (int i = 0; i < n_mels + 2; ++i) {
    edges[static_cast<std::size_t>(i)] = mel_to_hz(mel_lo + (mel_hi - mel_lo) * i / (n_mels + 1));
  }
  const double bin_hz = static_cast<double>(sample_rate_hz) / n_fft;
  for (int m = 0; m < n_mels; ++m) {
    const double lo = edges[static_cast<std::size_t>(m)];
    const double center = edges[static_cast<std::size_t>(m + 1)];
    const double hi = edges[static_cast<std::size_t>(m + 2)];
    fb.centers_hz.push_back(center);
    bool any = false;
    for (int k = 0; k < n_bins; ++k) {
      const double f = k * bin_hz;
      const double w = std::max(0.0, std::min((f - lo) / (center - lo), (hi - f) / (hi - center)));
      fb.weights(m, k) = w;
      any = any || w > 0.0;
    }
    if (!any) {
      const auto nearest = std::min<long>(n_bins - 1, std::lround(center / bin_hz));
      fb.weights(m, nearest) = 1.0;
    }
  }
  return fb;
}

}  // namespace aumol::dsp
