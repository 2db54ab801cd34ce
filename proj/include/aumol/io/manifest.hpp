#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aumol/errors.hpp"
#include "aumol/eval/metrics.hpp"

namespace aumol::io {

struct EntityAnnotation {
  std::string text;
  long start_token = 0;  // offset in the normalized reference
  friend bool operator==(const EntityAnnotation&, const EntityAnnotation&) = default;
};

/// One dataset line: {"id", "audio_path", "transcript", "entities"?}.
struct ManifestRecord {
  std::string id;
  std::string audio_path;
  std::string transcript;
  std::vector<EntityAnnotation> entities;
  friend bool operator==(const ManifestRecord&, const ManifestRecord&) = default;
};

/// One transcription output line: {"id", "hypothesis"}.
struct HypothesisRecord {
  std::string id;
  std::string hypothesis;
  friend bool operator==(const HypothesisRecord&, const HypothesisRecord&) = default;
};

namespace detail {

template <class F>
void for_each_json_line(const std::string& text, const std::string& name, F&& f) {
  std::istringstream in(text);
  std::string line;
  for (long n = 1; std::getline(in, line); ++n) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = name + ":" + std::to_string(n);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(where + ": not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw ConfigError(where + ": expected a JSON object");
    try {
      f(j, where);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
}

inline void require_unique(std::set<std::string>& seen, const std::string& id, const std::string& where) {
  if (id.empty()) throw ConfigError(where + ": empty id");
  if (!seen.insert(id).second) throw ConfigError(where + ": duplicate id '" + id + "'");
}

inline void reject_unknown(const nlohmann::json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!ok.count(it.key())) throw ConfigError(where + ": unknown field '" + it.key() + "'");
}

}  // namespace detail

/// Parses a dataset manifest. Relative audio paths resolve against
/// base_dir; with check_audio each referenced file must exist.
inline std::vector<ManifestRecord> parse_manifest(const std::string& text, const std::string& name,
                                                  const std::filesystem::path& base_dir = {}, bool check_audio = true) {
  std::vector<ManifestRecord> out;
  std::set<std::string> seen;
  detail::for_each_json_line(text, name, [&](const nlohmann::json& j, const std::string& where) {
    detail::reject_unknown(j, {"id", "audio_path", "transcript", "entities"}, where);
    ManifestRecord r;
    r.id = j.at("id").get<std::string>();
    r.audio_path = j.at("audio_path").get<std::string>();
    r.transcript = j.at("transcript").get<std::string>();
    detail::require_unique(seen, r.id, where);
    if (j.contains("entities")) {
      for (const auto& e : j.at("entities")) {
        detail::reject_unknown(e, {"text", "start_token"}, where);
        r.entities.push_back({e.at("text").get<std::string>(), e.at("start_token").get<long>()});
      }
    }
    if (check_audio) {
      const auto p = std::filesystem::path(r.audio_path).is_absolute() ? std::filesystem::path(r.audio_path)
                                                                      : base_dir / r.audio_path;
      if (!std::filesystem::exists(p)) throw IoError(where + ": audio file not found: " + p.string());
    }
    out.push_back(std::move(r));
  });
  return out;
}

inline std::string serialize_manifest(const std::vector<ManifestRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    nlohmann::json j = {{"id", r.id}, {"audio_path", r.audio_path}, {"transcript", r.transcript}};
    if (!r.entities.empty()) {
      j["entities"] = nlohmann::json::array();
      for (const auto& e : r.entities) j["entities"].push_back({{"text", e.text}, {"start_token", e.start_token}});
    }
    out += j.dump() + "\n";
  }
  return out;
}

inline std::vector<HypothesisRecord> parse_hypotheses(const std::string& text, const std::string& name) {
  std::vector<HypothesisRecord> out;
  std::set<std::string> seen;
  detail::for_each_json_line(text, name, [&](const nlohmann::json& j, const std::string& where) {
    detail::reject_unknown(j, {"id", "hypothesis"}, where);
    HypothesisRecord r{j.at("id").get<std::string>(), j.at("hypothesis").get<std::string>()};
    detail::require_unique(seen, r.id, where);
    out.push_back(std::move(r));
  });
  return out;
}

inline std::string serialize_hypotheses(const std::vector<HypothesisRecord>& records) {
  std::string out;
  for (const auto& r : records) out += nlohmann::json{{"id", r.id}, {"hypothesis", r.hypothesis}}.dump() + "\n";
  return out;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::vector<ManifestRecord> load_manifest(const std::string& path, bool check_audio = true) {
  return parse_manifest(read_text(path), path, std::filesystem::path(path).parent_path(), check_audio);
}

/// Self-contained scoring lines: {"id", "ref", "hyp", "entities"?}.
inline std::vector<eval::TranscriptRecord> parse_eval_records(const std::string& text, const std::string& name) {
  std::vector<eval::TranscriptRecord> out;
  std::set<std::string> seen;
  detail::for_each_json_line(text, name, [&](const nlohmann::json& j, const std::string& where) {
    detail::reject_unknown(j, {"id", "ref", "hyp", "entities"}, where);
    eval::TranscriptRecord r{j.at("id").get<std::string>(), j.at("ref").get<std::string>(),
                             j.at("hyp").get<std::string>(), {}};
    detail::require_unique(seen, r.utterance_id, where);
    if (j.contains("entities")) {
      for (const auto& e : j.at("entities")) {
        detail::reject_unknown(e, {"text", "start_token"}, where);
        r.entities.push_back(eval::make_entity(e.at("text").get<std::string>(), e.at("start_token").get<long>()));
      }
    }
    out.push_back(std::move(r));
  });
  return out;
}

/// Pairs references with hypotheses by id, in reference order. Any id on
/// only one side is an error that lists every such id.
inline std::vector<eval::TranscriptRecord> join_for_eval(const std::vector<ManifestRecord>& refs,
                                                         const std::vector<HypothesisRecord>& hyps) {
  std::map<std::string, const HypothesisRecord*> by_id;
  for (const auto& h : hyps) by_id[h.id] = &h;
  std::vector<std::string> missing, extra;
  std::set<std::string> ref_ids;
  for (const auto& r : refs) {
    ref_ids.insert(r.id);
    if (!by_id.count(r.id)) missing.push_back(r.id);
  }
  for (const auto& h : hyps)
    if (!ref_ids.count(h.id)) extra.push_back(h.id);
  if (!missing.empty() || !extra.empty()) {
    std::string msg = "reference and hypothesis ids differ";
    auto list = [&](const char* label, const std::vector<std::string>& ids) {
      if (ids.empty()) return;
      msg += std::string("\n  ") + label + " (" + std::to_string(ids.size()) + "):";
      for (const auto& id : ids) msg += " " + id;
    };
    list("missing hypotheses", missing);
    list("extra hypotheses", extra);
    throw ConfigError(msg);
  }
  std::vector<eval::TranscriptRecord> out;
  for (const auto& r : refs) {
    eval::TranscriptRecord t{r.id, r.transcript, by_id.at(r.id)->hypothesis, {}};
    for (const auto& e : r.entities) t.entities.push_back(eval::make_entity(e.text, e.start_token));
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace aumol::io
