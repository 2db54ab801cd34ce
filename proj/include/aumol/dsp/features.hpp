#pragma once

#include <Eigen/Core>

#include <cmath>
#include <string>
#include <vector>

#include "aumol/dsp/spectral.hpp"

namespace aumol::dsp {

inline constexpr double kLogFloor = 1e-10;
inline constexpr int kMelBins = 80;
inline constexpr int kFramesPer30s = 3000;

struct NormalizationStats {
  std::vector<double> mean;
  std::vector<double> stddev;  // population std; 0 marks a constant bin
};

/// Per-bin z-scored log-Mel spectrogram, n_mels x n_frames.
struct LogMelFeatures {
  Eigen::MatrixXd values;
  NormalizationStats stats;

  int n_mels() const { return static_cast<int>(values.rows()); }
  int n_frames() const { return static_cast<int>(values.cols()); }
};

/// Z-scores every row in place. Rows whose spread is negligible relative to
/// their level become all zeros.
inline NormalizationStats normalize_bins(Eigen::MatrixXd& m) {
  NormalizationStats stats;
  const auto n = static_cast<double>(m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const double mu = m.row(r).sum() / n;
    const double var = (m.row(r).array() - mu).square().sum() / n;
    const double sd = std::sqrt(var);
    stats.mean.push_back(mu);
    if (sd <= 1e-12 * std::max(1.0, std::abs(mu))) {
      m.row(r).setZero();
      stats.stddev.push_back(0.0);
    } else {
      m.row(r) = (m.row(r).array() - mu) / sd;
      stats.stddev.push_back(sd);
    }
  }
  return stats;
}

/// log(mel power + eps) before padding and normalization, n_mels x n_frames.
inline Eigen::MatrixXd log_mel(const AudioBuffer& audio, const StftConfig& cfg, const MelFilterbank& fb) {
  if (audio.sample_rate_hz != fb.sample_rate_hz) {
    throw InvalidConfig("audio is " + std::to_string(audio.sample_rate_hz) + " Hz but the filterbank expects " +
                        std::to_string(fb.sample_rate_hz) + " Hz; resample first");
  }
  if (cfg.n_fft != fb.n_fft) throw InvalidConfig("STFT n_fft does not match the filterbank");
  const Eigen::MatrixXd mag = frame_stft(audio, cfg);
  Eigen::MatrixXd mel = fb.apply(mag.array().square().matrix());
  return (mel.array() + kLogFloor).log().matrix();
}

/// STFT -> Mel projection -> log -> pad/truncate to target_frames -> per-bin z-score.
inline LogMelFeatures featurize(const AudioBuffer& audio, const StftConfig& cfg, const MelFilterbank& fb,
                                int target_frames) {
  if (target_frames < 1) throw InvalidConfig("target_frames must be >= 1");
  const Eigen::MatrixXd raw = log_mel(audio, cfg, fb);
  LogMelFeatures out;
  out.values = Eigen::MatrixXd::Constant(raw.rows(), target_frames, std::log(kLogFloor));
  const Eigen::Index keep = std::min<Eigen::Index>(raw.cols(), target_frames);
  out.values.leftCols(keep) = raw.leftCols(keep);
  out.stats = normalize_bins(out.values);
  return out;
}

/// Frontend with the defaults used throughout: 25 ms periodic-Hann window,
/// 10 ms hop, n_fft 400, 80 bins over [0, 8000] Hz at 16 kHz.
struct Frontend {
  StftConfig stft;
  MelFilterbank filterbank = build_mel_filterbank(kMelBins, 400, kTargetSampleRate, 0.0, kTargetSampleRate / 2.0);
  int target_frames = kFramesPer30s;

  LogMelFeatures operator()(const AudioBuffer& audio) const {
    const AudioBuffer at_rate =
        audio.sample_rate_hz == filterbank.sample_rate_hz ? audio : resample(audio, filterbank.sample_rate_hz);
    return featurize(at_rate, stft, filterbank, target_frames);
  }
};

}  // namespace aumol::dsp
