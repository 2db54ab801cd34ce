#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>

#include "aumol/dsp/features.hpp"
#include "aumol/io/binary.hpp"

namespace aumol::io {

// Layout: "AUML" | version u32 | n_mels u32 | n_frames u32 | n_mels*n_frames f32,
// row-major, all little-endian.
inline constexpr std::uint32_t kFeatureDumpVersion = 1;

inline std::vector<char> encode_features(const Eigen::MatrixXd& values) {
  ByteWriter w;
  w.bytes("AUML");
  w.u32(kFeatureDumpVersion);
  w.u32(static_cast<std::uint32_t>(values.rows()));
  w.u32(static_cast<std::uint32_t>(values.cols()));
  for (Eigen::Index r = 0; r < values.rows(); ++r)
    for (Eigen::Index c = 0; c < values.cols(); ++c) w.f32(static_cast<float>(values(r, c)));
  return w.buffer();
}

inline Eigen::MatrixXd decode_features(const std::vector<char>& bytes, const std::string& name) {
  try {
    ByteReader r(bytes.data(), bytes.size());
    if (r.bytes(4) != "AUML") throw IoError(name + ": bad feature dump magic");
    const auto version = r.u32();
    if (version != kFeatureDumpVersion) {
      throw UnsupportedVersion(name + ": feature dump version " + std::to_string(version));
    }
    const auto rows = r.u32();
    const auto cols = r.u32();
    Eigen::MatrixXd m(rows, cols);
    for (std::uint32_t i = 0; i < rows; ++i)
      for (std::uint32_t j = 0; j < cols; ++j) m(i, j) = r.f32();
    if (r.remaining() != 0) throw IoError(name + ": trailing bytes after feature payload");
    return m;
  } catch (const IntegrityError&) {
    throw IoError(name + ": truncated feature dump");
  }
}

inline void write_features(const std::string& path, const dsp::LogMelFeatures& f) {
  write_file(path, encode_features(f.values));
}

inline Eigen::MatrixXd read_features(const std::string& path) { return decode_features(read_file(path), path); }

}  // namespace aumol::io
