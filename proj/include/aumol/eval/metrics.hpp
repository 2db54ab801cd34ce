#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aumol/errors.hpp"
#include "aumol/eval/align.hpp"
#include "aumol/eval/normalize.hpp"

namespace aumol::eval {

struct WerResult {
  double rate = 0.0;
  EditCounts counts;
  long ref_len = 0;
};

/// (S + D + I) / len(ref). Exceeds 1 when insertions dominate.
inline WerResult wer(const Tokens& ref, const Tokens& hyp) {
  if (ref.empty()) throw ContractError("wer: empty reference");
  const auto a = levenshtein_align(ref, hyp);
  return {static_cast<double>(a.counts.errors()) / static_cast<double>(ref.size()), a.counts,
          static_cast<long>(ref.size())};
}

/// Entity words in normalized reference coordinates.
struct EntitySpan {
  Tokens words;
  long position = 0;
};

struct TranscriptRecord {
  std::string utterance_id;
  std::string reference;
  std::string hypothesis;
  std::vector<EntitySpan> entities;
};

/// Entity annotation as written in a manifest: raw text plus the offset of
/// its first token in the normalized reference.
inline EntitySpan make_entity(std::string_view text, long start_token) {
  return {normalize(text), start_token};
}

enum class EwerAggregation { micro, macro };

struct UtteranceScore {
  std::string id;
  EditCounts counts;
  long ref_len = 0;
  double wer = 0.0;
  long entity_words_total = 0;
  long entity_words_errored = 0;
  std::optional<double> ewer;  // empty when the utterance has no entities
  std::vector<double> entity_rates;  // per-entity errored fraction
};

struct EvalReport {
  std::string model;
  std::vector<UtteranceScore> utterances;
  EditCounts counts;
  long ref_words = 0;
  long entity_words_total = 0;
  long entity_words_errored = 0;
  EwerAggregation aggregation = EwerAggregation::micro;
  double wer = 0.0;
  std::optional<double> ewer;  // empty when no record has entities
};

inline void check_spans(const std::string& id, const Tokens& ref, const std::vector<EntitySpan>& entities) {
  for (std::size_t e = 0; e < entities.size(); ++e) {
    const auto& s = entities[e];
    const std::string where = "utterance '" + id + "' entity " + std::to_string(e);
    if (s.words.empty()) throw ContractError(where + " has no tokens");
    if (s.position < 0 || static_cast<std::size_t>(s.position) + s.words.size() > ref.size()) {
      throw ContractError(where + " runs past the reference (" + std::to_string(ref.size()) + " tokens)");
    }
    for (std::size_t k = 0; k < s.words.size(); ++k) {
      if (ref[static_cast<std::size_t>(s.position) + k] != s.words[k]) {
        throw ContractError(where + ": token '" + s.words[k] + "' does not match reference token '" +
                            ref[static_cast<std::size_t>(s.position) + k] + "'");
      }
    }
  }
}

/// Scores one record on normalized text. An entity word is errored unless
/// its alignment column is an exact match.
inline UtteranceScore score_record(const TranscriptRecord& r, Aligner& aligner) {
  const auto ref = normalize(r.reference);
  const auto hyp = normalize(r.hypothesis);
  if (ref.empty()) throw ContractError("utterance '" + r.utterance_id + "' has an empty normalized reference");
  check_spans(r.utterance_id, ref, r.entities);
  const auto a = aligner.align(std::span<const std::string>(ref), std::span<const std::string>(hyp));

  std::vector<char> matched(ref.size(), 0);
  for (const auto& col : a.script)
    if (col.op == EditOp::match) matched[static_cast<std::size_t>(col.ref_index)] = 1;

  UtteranceScore s;
  s.id = r.utterance_id;
  s.counts = a.counts;
  s.ref_len = static_cast<long>(ref.size());
  s.wer = static_cast<double>(a.counts.errors()) / static_cast<double>(ref.size());
  for (const auto& e : r.entities) {
    long errored = 0;
    for (std::size_t k = 0; k < e.words.size(); ++k) errored += !matched[static_cast<std::size_t>(e.position) + k];
    s.entity_words_total += static_cast<long>(e.words.size());
    s.entity_words_errored += errored;
    s.entity_rates.push_back(static_cast<double>(errored) / static_cast<double>(e.words.size()));
  }
  if (s.entity_words_total > 0) {
    s.ewer = static_cast<double>(s.entity_words_errored) / static_cast<double>(s.entity_words_total);
  }
  return s;
}

/// Corpus WER and EWER. Micro EWER is errored entity words over all entity
/// words; macro is the mean of per-entity rates, summed in sorted order so
/// the result does not depend on record order.
inline EvalReport evaluate(const std::vector<TranscriptRecord>& records, std::string model_name = "model",
                           EwerAggregation aggregation = EwerAggregation::micro) {
  EvalReport rep;
  rep.model = std::move(model_name);
  rep.aggregation = aggregation;
  Aligner aligner;
  std::vector<double> rates;
  for (const auto& r : records) {
    auto s = score_record(r, aligner);
    rep.counts += s.counts;
    rep.ref_words += s.ref_len;
    rep.entity_words_total += s.entity_words_total;
    rep.entity_words_errored += s.entity_words_errored;
    rates.insert(rates.end(), s.entity_rates.begin(), s.entity_rates.end());
    rep.utterances.push_back(std::move(s));
  }
  if (rep.ref_words == 0) throw ContractError("evaluate: no records");
  rep.wer = static_cast<double>(rep.counts.errors()) / static_cast<double>(rep.ref_words);
  if (rep.entity_words_total > 0) {
    if (aggregation == EwerAggregation::micro) {
      rep.ewer = static_cast<double>(rep.entity_words_errored) / static_cast<double>(rep.entity_words_total);
    } else {
      std::sort(rates.begin(), rates.end());
      double sum = 0.0;
      for (double x : rates) sum += x;
      rep.ewer = sum / static_cast<double>(rates.size());
    }
  }
  return rep;
}

inline nlohmann::json counts_json(const EditCounts& c) {
  return {{"matches", c.matches}, {"substitutions", c.substitutions}, {"deletions", c.deletions},
          {"insertions", c.insertions}};
}

inline nlohmann::json to_json(const EvalReport& rep) {
  using nlohmann::json;
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  json rows = json::array();
  for (const auto& u : rep.utterances) {
    json row = counts_json(u.counts);
    row["id"] = u.id;
    row["ref_len"] = u.ref_len;
    row["wer"] = u.wer;
    row["entity_words_total"] = u.entity_words_total;
    row["entity_words_errored"] = u.entity_words_errored;
    row["ewer"] = opt(u.ewer);
    rows.push_back(std::move(row));
  }
  json corpus = counts_json(rep.counts);
  corpus["ref_words"] = rep.ref_words;
  corpus["wer"] = rep.wer;
  corpus["entity_words_total"] = rep.entity_words_total;
  corpus["entity_words_errored"] = rep.entity_words_errored;
  corpus["ewer"] = opt(rep.ewer);
  corpus["ewer_aggregation"] = rep.aggregation == EwerAggregation::micro ? "micro" : "macro";
  return {{"model", rep.model}, {"utterances", rows}, {"corpus", corpus}};
}

/// Plain-text summary: one row with model, WER, EWER (rates as fractions).
inline std::string to_text_table(const std::vector<EvalReport>& reports) {
  std::size_t width = 5;
  for (const auto& r : reports) width = std::max(width, r.model.size());
  auto pad = [&](const std::string& s) { return s + std::string(width - s.size(), ' '); };
  std::string out = pad("model") + "  WER     EWER\n";
  char buf[64];
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof buf, "  %-6.4f  ", r.wer);
    out += pad(r.model) + buf;
    if (r.ewer) {
      std::snprintf(buf, sizeof buf, "%.4f\n", *r.ewer);
      out += buf;
    } else {
      out += "n/a\n";
    }
  }
  return out;
}

}  // namespace aumol::eval
