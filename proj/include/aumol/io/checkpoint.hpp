#pragma once

#include <zlib.h>

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "aumol/io/binary.hpp"
#include "aumol/model/aumol.hpp"

namespace aumol::io {

// Layout, little-endian:
//   "AUMC" | version u32 | config JSON (u32 length + bytes) | stage i32 | step u64
//   | n_params u32 | per param: name (u32 length + bytes), ndim u32, dims u64 x ndim,
//     dtype u8, payload (f64 x prod(dims))
//   | CRC32 u32 over every preceding byte.
inline constexpr std::uint32_t kCheckpointVersion = 1;
inline constexpr std::uint8_t kDtypeF64 = 1;

struct TensorRecord {
  std::string name;
  ad::Shape shape;
  std::vector<double> values;
};

struct Checkpoint {
  model::ModelConfig config;
  int stage = 0;
  long step = 0;
  std::vector<TensorRecord> tensors;
};

inline std::uint32_t crc32_of(const char* data, std::size_t n) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed in chunks so large files stay correct.
  while (n > 0) {
    const auto chunk = static_cast<uInt>(std::min<std::size_t>(n, 1u << 30));
    crc = crc32(crc, reinterpret_cast<const Bytef*>(data), chunk);
    data += chunk;
    n -= chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

inline Checkpoint snapshot(const model::Model& m, int stage, long step) {
  Checkpoint c{m.cfg, stage, step, {}};
  for (const auto& p : m.parameters()) {
    c.tensors.push_back({p.name, p.value.shape(), {p.value.data().begin(), p.value.data().end()}});
  }
  return c;
}

inline std::vector<char> encode_checkpoint(const Checkpoint& c, std::uint32_t version = kCheckpointVersion) {
  ByteWriter w;
  w.bytes("AUMC");
  w.u32(version);
  w.str(model::to_json(c.config).dump());
  w.u32(static_cast<std::uint32_t>(c.stage));
  w.u64(static_cast<std::uint64_t>(c.step));
  w.u32(static_cast<std::uint32_t>(c.tensors.size()));
  for (const auto& t : c.tensors) {
    w.str(t.name);
    w.u32(static_cast<std::uint32_t>(t.shape.size()));
    for (auto d : t.shape) w.u64(d);
    w.u8(kDtypeF64);
    for (double v : t.values) w.f64(v);
  }
  const auto& buf = w.buffer();
  w.u32(crc32_of(buf.data(), buf.size()));
  return w.buffer();
}

/// Validates the CRC before interpreting any field, so a corrupted file is
/// reported as IntegrityError and never partially decoded.
inline Checkpoint decode_checkpoint(const std::vector<char>& bytes, const std::string& name) {
  if (bytes.size() < 12) throw IntegrityError(name + ": checkpoint truncated (" + std::to_string(bytes.size()) + " bytes)");
  const std::size_t body = bytes.size() - 4;
  ByteReader tail(bytes.data() + body, 4);
  if (tail.u32() != crc32_of(bytes.data(), body)) throw IntegrityError(name + ": checkpoint CRC mismatch");

  ByteReader r(bytes.data(), body);
  Checkpoint c;
  try {
    if (r.bytes(4) != "AUMC") throw IntegrityError(name + ": not a checkpoint (bad magic)");
    const auto version = r.u32();
    if (version != kCheckpointVersion) {
      throw UnsupportedVersion(name + ": checkpoint format version " + std::to_string(version) + ", expected " +
                               std::to_string(kCheckpointVersion));
    }
    nlohmann::json cfg;
    try {
      cfg = nlohmann::json::parse(r.str());
    } catch (const nlohmann::json::exception& e) {
      throw IntegrityError(name + ": config snapshot is not JSON: " + e.what());
    }
    c.config = model::model_config_from_json(cfg);
    c.stage = static_cast<int>(r.u32());
    c.step = static_cast<long>(r.u64());
    const auto n = r.u32();
    std::set<std::string> seen;
    for (std::uint32_t i = 0; i < n; ++i) {
      TensorRecord t;
      t.name = r.str();
      if (!seen.insert(t.name).second) throw IntegrityError(name + ": duplicate tensor '" + t.name + "'");
      const auto ndim = r.u32();
      if (ndim > 8) throw IntegrityError(name + ": tensor '" + t.name + "' has " + std::to_string(ndim) + " dims");
      std::size_t count = 1;
      for (std::uint32_t d = 0; d < ndim; ++d) {
        t.shape.push_back(static_cast<std::size_t>(r.u64()));
        count *= t.shape.back();
      }
      if (r.u8() != kDtypeF64) throw IntegrityError(name + ": tensor '" + t.name + "' has unknown dtype");
      if (count > r.remaining() / 8) throw IntegrityError(name + ": tensor '" + t.name + "' overruns the file");
      t.values.resize(count);
      for (auto& v : t.values) v = r.f64();
      c.tensors.push_back(std::move(t));
    }
    if (r.remaining() != 0) throw IntegrityError(name + ": trailing bytes after tensors");
  } catch (const IntegrityError& e) {
    const std::string what = e.what();
    throw IntegrityError(what.rfind(name, 0) == 0 ? what : name + ": " + what);
  }
  return c;
}

inline void save_checkpoint(const std::string& path, const model::Model& m, int stage, long step) {
  write_file(path, encode_checkpoint(snapshot(m, stage, step)));
}

inline Checkpoint read_checkpoint(const std::string& path) { return decode_checkpoint(read_file(path), path); }

/// Copies checkpoint tensors into m. Every check runs before the first write:
/// config equality (ConfigError naming the first differing field), then an
/// exact one-to-one name and shape match.
inline void load_into(model::Model& m, const Checkpoint& c) {
  if (const auto field = model::first_difference(m.cfg, c.config); !field.empty()) {
    throw ConfigError("checkpoint config differs from model config in field '" + field + "': checkpoint has " +
                      model::to_json(c.config).at(field).dump() + ", model has " +
                      model::to_json(m.cfg).at(field).dump());
  }
  std::map<std::string, const TensorRecord*> by_name;
  for (const auto& t : c.tensors) by_name[t.name] = &t;
  const auto params = m.parameters();
  for (const auto& p : params) {
    const auto it = by_name.find(p.name);
    if (it == by_name.end()) throw ConfigError("checkpoint is missing parameter '" + p.name + "'");
    if (it->second->shape != p.value.shape()) {
      throw ConfigError("parameter '" + p.name + "' has shape " + ad::shape_str(it->second->shape) +
                        " in the checkpoint, model expects " + ad::shape_str(p.value.shape()));
    }
  }
  if (by_name.size() != params.size()) {
    std::set<std::string> known;
    for (const auto& p : params) known.insert(p.name);
    for (const auto& [n, t] : by_name)
      if (!known.count(n)) throw ConfigError("checkpoint has unknown parameter '" + n + "'");
  }
  for (const auto& p : params) {
    auto v = p.value;
    const auto& src = by_name.at(p.name)->values;
    auto dst = v.mutable_data();
    std::copy(src.begin(), src.end(), dst.begin());
  }
}

/// Model rebuilt from a checkpoint's own config.
inline model::Model model_from_checkpoint(const Checkpoint& c) {
  auto m = model::Model::init(c.config, 0);
  load_into(m, c);
  return m;
}

}  // namespace aumol::io
