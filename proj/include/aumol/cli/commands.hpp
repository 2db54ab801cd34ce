#pragma once

#include <spdlog/spdlog.h>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aumol/data/synth.hpp"
#include "aumol/eval/metrics.hpp"
#include "aumol/io/checkpoint.hpp"
#include "aumol/io/feature_dump.hpp"
#include "aumol/io/manifest.hpp"
#include "aumol/io/run_config.hpp"
#include "aumol/io/wav.hpp"
#include "aumol/train/toy.hpp"

namespace aumol::cli {

namespace fs = std::filesystem;

enum class ReportFormat { text, structured };

inline ReportFormat report_format_from_string(std::string_view s) {
  if (s == "text") return ReportFormat::text;
  if (s == "structured") return ReportFormat::structured;
  throw ConfigError("unknown report format '" + std::string(s) + "' (expected text or structured)");
}

inline void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

// featurize -----------------------------------------------------------------

/// Reads a WAV and writes its (n_mels, frames) feature dump. Returns the shape.
inline std::pair<int, int> featurize(const std::string& audio_path, const std::string& out_path,
                                     const dsp::Frontend& frontend = {}) {
  const auto audio = io::read_wav(audio_path);
  dsp::LogMelFeatures f;
  try {
    f = frontend(audio);
  } catch (const Error& e) {
    throw IoError(audio_path + ": " + e.what());
  }
  io::write_features(out_path, f);
  return {f.n_mels(), f.n_frames()};
}

// synth ---------------------------------------------------------------------

/// Writes the toy corpus as WAV files plus manifest.jsonl into dir.
inline fs::path write_toy_corpus(const fs::path& dir, std::uint64_t base_seed = 100) {
  fs::create_directories(dir);
  std::vector<io::ManifestRecord> records;
  std::uint64_t i = 0;
  for (const auto& u : data::toy_corpus()) {
    const std::string file = u.id + ".wav";
    io::write_wav((dir / file).string(), data::synth_utterance(u.transcript, base_seed + i++));
    records.push_back({u.id, file, u.transcript, {}});
  }
  const auto manifest = dir / "manifest.jsonl";
  write_text_file(manifest, io::serialize_manifest(records));
  return manifest;
}

// train ---------------------------------------------------------------------

/// Command-line values that take precedence over the config file.
struct TrainOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> alpha;
  std::optional<std::string> adapter_variant;
  std::optional<int> downsample;
  std::optional<std::string> output_dir;
};

inline io::RunConfig apply_overrides(io::RunConfig rc, const TrainOverrides& o) {
  if (o.seed) rc.seed = rc.train.seed = *o.seed;
  if (o.alpha) rc.train.alpha = *o.alpha;
  if (o.adapter_variant) rc.model.adapter_variant = model::adapter_variant_from_string(*o.adapter_variant);
  if (o.downsample) rc.model.downsample_factor = *o.downsample;
  if (o.output_dir) rc.output_dir = *o.output_dir;
  if (auto v = rc.violations(); !v.empty()) {
    std::string msg = "invalid run config after command-line overrides:";
    for (const auto& s : v) msg += "\n  - " + s;
    throw ConfigError(msg);
  }
  return rc;
}

inline fs::path resolve_audio(const fs::path& manifest, const std::string& audio_path) {
  const fs::path p(audio_path);
  return p.is_absolute() ? p : manifest.parent_path() / p;
}

inline std::vector<train::Example> load_training_data(const model::Model& m, const io::RunConfig& rc) {
  if (rc.data.source == io::DataSource::toy) return train::toy_examples(m, rc.data.toy_seed);
  const auto records = io::load_manifest(rc.data.manifest);
  const auto frontend = model::frontend_for(m.cfg);
  std::vector<train::Example> out;
  for (const auto& r : records) {
    const auto path = resolve_audio(rc.data.manifest, r.audio_path).string();
    dsp::LogMelFeatures f;
    try {
      f = frontend(io::read_wav(path));
    } catch (const IoError&) {
      throw;
    } catch (const Error& e) {
      throw IoError(path + ": " + e.what());
    }
    out.push_back(train::make_example(m, r.id, f, r.transcript));
  }
  return out;
}

struct TrainOutputs {
  std::vector<fs::path> checkpoints;  // one per epoch, then final
  fs::path log_path;
  train::TrainResult result;
};

inline std::string checkpoint_name(int epoch) { return "epoch-" + std::to_string(epoch + 1) + ".aumc"; }

/// Runs the trainer, writing run.json (resolved config and seed),
/// train_log.csv (one row per step), a checkpoint after every epoch and
/// final.aumc.
inline TrainOutputs run_training(const io::RunConfig& rc) {
  const fs::path dir(rc.output_dir);
  fs::create_directories(dir);
  auto m = model::Model::init(rc.model, rc.seed);
  spdlog::info("seed {}; model d_enc={} d_llm={} adapter={} downsample={}", rc.seed, m.cfg.d_enc, m.cfg.d_llm,
               model::to_string(m.cfg.adapter_variant), m.cfg.downsample_factor);
  const auto data = load_training_data(m, rc);
  spdlog::info("{} training utterances", data.size());

  nlohmann::json plan = nlohmann::json::array();
  for (const auto& s : rc.plan.stages) {
    nlohmann::json names = nlohmann::json::array();
    for (auto c : s.trainable) names.push_back(std::string(nn::to_string(c)));
    plan.push_back({{"epochs", s.epochs}, {"trainable", names}});
  }
  const nlohmann::json run = {
      {"seed", rc.seed},
      {"model", model::to_json(m.cfg)},
      {"train",
       {{"batch_size", rc.train.batch_size}, {"warmup_steps", rc.train.warmup_steps}, {"base_lr", rc.train.base_lr},
        {"weight_decay", rc.train.weight_decay}, {"clip_norm", rc.train.clip_norm}, {"alpha", rc.train.alpha},
        {"prompt", rc.train.prompt}}},
      {"plan", plan}};
  write_text_file(dir / "run.json", run.dump(2) + "\n");

  TrainOutputs out;
  out.log_path = dir / "train_log.csv";
  std::ofstream log(out.log_path, std::ios::trunc);
  if (!log) throw IoError("cannot write " + out.log_path.string());
  log << "step,epoch,stage,lr,output_loss,alignment_loss,total,grad_norm\n";
  log.precision(17);

  train::TrainHooks hooks;
  hooks.on_step = [&](const train::LogRecord& r) {
    log << r.step << ',' << r.epoch << ',' << r.stage << ',' << r.lr << ',' << r.output_loss << ','
        << r.alignment_loss << ',' << r.total << ',' << r.grad_norm << '\n';
    spdlog::debug("step {} lr {:.3g} out {:.5f} align {:.5f} total {:.5f}", r.step, r.lr, r.output_loss,
                  r.alignment_loss, r.total);
  };
  hooks.on_epoch_end = [&](int epoch, int stage, long step) {
    const auto path = dir / checkpoint_name(epoch);
    io::save_checkpoint(path.string(), m, stage, step);
    out.checkpoints.push_back(path);
    spdlog::info("epoch {} (stage {}) done at step {}; wrote {}", epoch + 1, stage, step, path.string());
  };
  out.result = train::train(m, data, rc.train, rc.plan, hooks);
  const auto final_path = dir / "final.aumc";
  io::save_checkpoint(final_path.string(), m, static_cast<int>(rc.plan.stages.size()) - 1, out.result.total_steps);
  out.checkpoints.push_back(final_path);
  spdlog::info("wrote {}", final_path.string());
  return out;
}

// transcribe ----------------------------------------------------------------

/// Loads a checkpoint; with `expected` set, its config must match exactly.
inline model::Model load_model(const std::string& checkpoint, const std::optional<model::ModelConfig>& expected) {
  const auto ckpt = io::read_checkpoint(checkpoint);
  if (expected) {
    auto m = model::Model::init(*expected, 0);
    io::load_into(m, ckpt);
    return m;
  }
  return io::model_from_checkpoint(ckpt);
}

inline std::string transcribe_file(const model::Model& m, const std::string& audio_path, const std::string& prompt) {
  return model::greedy_transcribe(io::read_wav(audio_path), m, prompt);
}

/// One hypothesis per manifest entry, in manifest order.
inline std::vector<io::HypothesisRecord> transcribe_manifest(const model::Model& m, const std::string& manifest,
                                                             const std::string& prompt) {
  std::vector<io::HypothesisRecord> out;
  for (const auto& r : io::load_manifest(manifest)) {
    out.push_back({r.id, transcribe_file(m, resolve_audio(manifest, r.audio_path).string(), prompt)});
  }
  return out;
}

// evaluate ------------------------------------------------------------------

inline std::string render_report(const eval::EvalReport& rep, ReportFormat format) {
  return format == ReportFormat::structured ? eval::to_json(rep).dump(2) + "\n" : eval::to_text_table({rep});
}

inline eval::EvalReport evaluate_files(const std::string& ref_manifest, const std::string& hyp_manifest,
                                       const std::string& model_name, eval::EwerAggregation agg) {
  const auto refs = io::load_manifest(ref_manifest, false);
  const auto hyps = io::parse_hypotheses(io::read_text(hyp_manifest), hyp_manifest);
  return eval::evaluate(io::join_for_eval(refs, hyps), model_name, agg);
}

// inspect-checkpoint --------------------------------------------------------

inline nlohmann::json describe_checkpoint(const io::Checkpoint& c) {
  nlohmann::json tensors = nlohmann::json::array();
  std::size_t total = 0;
  for (const auto& t : c.tensors) {
    tensors.push_back({{"name", t.name}, {"shape", t.shape}});
    total += t.values.size();
  }
  return {{"format_version", io::kCheckpointVersion},
          {"config", model::to_json(c.config)},
          {"stage", c.stage},
          {"step", c.step},
          {"parameter_count", total},
          {"tensors", tensors}};
}

inline std::string describe_checkpoint_text(const io::Checkpoint& c) {
  const auto j = describe_checkpoint(c);
  std::string out = "format_version " + j["format_version"].dump() + "\nstage " + std::to_string(c.stage) +
                    "\nstep " + std::to_string(c.step) + "\nparameters " + j["parameter_count"].dump() +
                    " in " + std::to_string(c.tensors.size()) + " tensors\nconfig " + j["config"].dump() + "\n";
  for (const auto& t : c.tensors) out += "  " + t.name + " " + ad::shape_str(t.shape) + "\n";
  return out;
}

}  // namespace aumol::cli
