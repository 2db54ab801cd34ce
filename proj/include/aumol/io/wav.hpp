#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "aumol/dsp/audio.hpp"
#include "aumol/io/binary.hpp"

namespace aumol::io {

namespace detail {
inline constexpr std::uint16_t kFormatPcm = 1;
inline constexpr std::uint16_t kFormatExtensible = 0xFFFE;
}  // namespace detail

/// Decodes a 16-bit PCM WAV held in memory; multi-channel input is averaged
/// down to mono. `name` only labels error messages.
inline dsp::AudioBuffer decode_wav(const std::vector<char>& bytes, const std::string& name) {
  auto fail = [&](const std::string& why) { return IoError(name + ": " + why); };
  try {
    ByteReader r(bytes.data(), bytes.size());
    if (r.bytes(4) != "RIFF") throw fail("not a RIFF file");
    r.u32();
    if (r.bytes(4) != "WAVE") throw fail("not a WAVE file");
    std::uint16_t channels = 0, bits = 0, format = 0;
    std::uint32_t rate = 0;
    bool have_fmt = false;
    while (r.remaining() >= 8) {
      const std::string_view id = r.bytes(4);
      const std::uint32_t size = r.u32();
      if (size > r.remaining()) throw fail("chunk '" + std::string(id) + "' overruns the file");
      if (id == "fmt ") {
        if (size < 16) throw fail("fmt chunk too short");
        ByteReader f(bytes.data() + r.position(), size);
        format = f.u16();
        channels = f.u16();
        rate = f.u32();
        f.u32();  // byte rate
        f.u16();  // block align
        bits = f.u16();
        if (format == detail::kFormatExtensible && size >= 26) {
          f.bytes(8);  // cbSize, valid bits, channel mask
          format = f.u16();  // leading bytes of the subformat GUID
        }
        have_fmt = true;
        r.bytes(std::min<std::size_t>(size + (size & 1u), r.remaining()));
      } else if (id == "data") {
        if (!have_fmt) throw fail("data chunk before fmt chunk");
        if (format != detail::kFormatPcm) throw fail("unsupported WAV encoding (only PCM)");
        if (bits != 16) throw fail("unsupported bit depth " + std::to_string(bits) + " (only 16-bit)");
        if (channels == 0) throw fail("zero channels");
        if (rate == 0) throw fail("zero sample rate");
        const std::size_t frames = size / (2u * channels);
        dsp::AudioBuffer audio;
        audio.sample_rate_hz = static_cast<int>(rate);
        audio.samples.resize(frames);
        ByteReader d(bytes.data() + r.position(), size);
        for (std::size_t i = 0; i < frames; ++i) {
          double acc = 0.0;
          for (std::uint16_t c = 0; c < channels; ++c) {
            acc += static_cast<std::int16_t>(d.u16()) / 32768.0;
          }
          audio.samples[i] = acc / channels;
        }
        return audio;
      } else {
        r.bytes(std::min<std::size_t>(size + (size & 1u), r.remaining()));
      }
    }
    throw fail("no data chunk");
  } catch (const IntegrityError&) {
    throw fail("truncated WAV file");
  }
}

inline dsp::AudioBuffer read_wav(const std::string& path) { return decode_wav(read_file(path), path); }

/// Writes mono 16-bit PCM; samples are clamped to [-1, 1].
inline void write_wav(const std::string& path, const dsp::AudioBuffer& audio) {
  ByteWriter w;
  const auto data_bytes = static_cast<std::uint32_t>(audio.samples.size() * 2);
  w.bytes("RIFF");
  w.u32(36 + data_bytes);
  w.bytes("WAVE");
  w.bytes("fmt ");
  w.u32(16);
  w.u16(detail::kFormatPcm);
  w.u16(1);  // channels
  w.u32(static_cast<std::uint32_t>(audio.sample_rate_hz));
  w.u32(static_cast<std::uint32_t>(audio.sample_rate_hz) * 2u);
  w.u16(2);   // block align
  w.u16(16);  // bits per sample
  w.bytes("data");
  w.u32(data_bytes);
  for (double s : audio.samples) {
    const double c = std::clamp(s, -1.0, 1.0);
    const auto v = static_cast<std::int16_t>(std::lround(c * 32767.0));
    w.u16(static_cast<std::uint16_t>(v));
  }
  write_file(path, w.buffer());
}

}  // namespace aumol::io
