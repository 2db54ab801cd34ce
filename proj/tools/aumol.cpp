// Command-line entry point. Exit codes: 0 success, 1 runtime or I/O failure,
// 2 invalid configuration or arguments, 3 training aborted on a non-finite value.

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <iostream>

#include "aumol/cli/commands.hpp"

namespace {

namespace cli = aumol::cli;

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("aumol");
  logger->set_pattern("[%H:%M:%S] [%^%l%$] %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::info);
  if (const char* env = std::getenv("AUML_LOG_LEVEL")) {
    const auto level = spdlog::level::from_str(env);
    // from_str maps unknown names to "off"; only accept that when asked for.
    if (level == spdlog::level::off && std::string_view(env) != "off") {
      spdlog::warn("ignoring unknown AUML_LOG_LEVEL '{}'", env);
    } else {
      spdlog::set_level(level);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();
  CLI::App app{"Audio-to-LLM ASR toolkit: featurize, train, transcribe, evaluate"};
  app.require_subcommand(1);

  // featurize
  std::string feat_audio, feat_out;
  auto* featurize = app.add_subcommand("featurize", "Write the log-Mel feature dump of a WAV file");
  featurize->add_option("audio", feat_audio, "Input WAV")->required();
  featurize->add_option("out", feat_out, "Output feature dump")->required();

  // synth
  std::string synth_dir;
  std::uint64_t synth_seed = 100;
  auto* synth = app.add_subcommand("synth", "Write the synthetic toy corpus (WAVs + manifest.jsonl)");
  synth->add_option("dir", synth_dir, "Output directory")->required();
  synth->add_option("--seed", synth_seed, "Audio seed of the first utterance");

  // train
  std::string train_config;
  cli::TrainOverrides ov;
  std::uint64_t ov_seed = 0;
  double ov_alpha = 0;
  std::string ov_variant, ov_output;
  int ov_downsample = 0;
  auto* train = app.add_subcommand("train", "Staged training from a run config");
  train->add_option("--config", train_config, "Run config (YAML)")->required();
  auto* seed_opt = train->add_option("--seed", ov_seed, "Override the run seed");
  auto* alpha_opt = train->add_option("--alpha", ov_alpha, "Override the alignment loss weight");
  auto* variant_opt = train->add_option("--adapter-variant", ov_variant, "full, single_fc or no_relu")
                          ->check(CLI::IsMember({"full", "single_fc", "no_relu"}));
  auto* ds_opt = train->add_option("--downsample", ov_downsample, "Override the encoder downsample factor");
  auto* out_opt = train->add_option("--output-dir", ov_output, "Override output_dir");

  // transcribe
  std::string tr_ckpt, tr_audio, tr_manifest, tr_out, tr_config, tr_prompt = std::string(aumol::model::kDefaultPrompt);
  auto* transcribe = app.add_subcommand("transcribe", "Greedy transcription of a WAV file or a manifest");
  transcribe->add_option("--checkpoint", tr_ckpt, "Checkpoint file")->required();
  auto* tr_audio_opt = transcribe->add_option("audio", tr_audio, "Single WAV file");
  auto* tr_manifest_opt = transcribe->add_option("--manifest", tr_manifest, "Dataset manifest (JSONL)");
  transcribe->add_option("--out", tr_out, "Hypothesis manifest to write (manifest mode)");
  transcribe->add_option("--config", tr_config, "Run config whose model section must match the checkpoint");
  transcribe->add_option("--prompt", tr_prompt, "Text prompt");
  tr_audio_opt->excludes(tr_manifest_opt);

  // evaluate
  std::string ev_ref, ev_hyp, ev_records, ev_out, ev_model = "model", ev_format = "text";
  bool ev_macro = false;
  auto* evaluate = app.add_subcommand("evaluate", "WER and EWER of hypotheses against references");
  auto* ref_opt = evaluate->add_option("--ref", ev_ref, "Reference manifest (JSONL with transcript/entities)");
  auto* hyp_opt = evaluate->add_option("--hyp", ev_hyp, "Hypothesis manifest (JSONL with id/hypothesis)");
  auto* rec_opt = evaluate->add_option("--records", ev_records, "Combined JSONL with id/ref/hyp/entities");
  evaluate->add_option("--out", ev_out, "Write the report here as well as to standard output");
  evaluate->add_option("--model-name", ev_model, "Model label in the report");
  evaluate->add_option("--report-format", ev_format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  evaluate->add_flag("--macro", ev_macro, "Macro-average EWER over entities instead of micro over words");
  ref_opt->needs(hyp_opt);
  hyp_opt->needs(ref_opt);
  rec_opt->excludes(ref_opt);

  // inspect-checkpoint
  std::string ic_path, ic_format = "text";
  auto* inspect = app.add_subcommand("inspect-checkpoint", "Print a checkpoint's header and tensor list");
  inspect->add_option("checkpoint", ic_path, "Checkpoint file")->required();
  inspect->add_option("--report-format", ic_format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*featurize) {
      const auto [mels, frames] = cli::featurize(feat_audio, feat_out);
      std::cout << "(" << mels << ", " << frames << ")\n";
    } else if (*synth) {
      std::cout << cli::write_toy_corpus(synth_dir, synth_seed).string() << "\n";
    } else if (*train) {
      if (*seed_opt) ov.seed = ov_seed;
      if (*alpha_opt) ov.alpha = ov_alpha;
      if (*variant_opt) ov.adapter_variant = ov_variant;
      if (*ds_opt) ov.downsample = ov_downsample;
      if (*out_opt) ov.output_dir = ov_output;
      const auto rc = cli::apply_overrides(aumol::io::load_run_config(train_config), ov);
      const auto out = cli::run_training(rc);
      const auto& last = out.result.log.back();
      std::cout << "steps " << out.result.total_steps << " output_loss " << last.output_loss << " alignment_loss "
                << last.alignment_loss << " total " << last.total << "\n";
      for (const auto& c : out.checkpoints) std::cout << c.string() << "\n";
    } else if (*transcribe) {
      std::optional<aumol::model::ModelConfig> expected;
      if (!tr_config.empty()) expected = aumol::io::load_run_config(tr_config).model;
      const auto m = cli::load_model(tr_ckpt, expected);
      if (*tr_manifest_opt) {
        if (tr_out.empty()) throw aumol::ConfigError("--out is required with --manifest");
        const auto hyps = cli::transcribe_manifest(m, tr_manifest, tr_prompt);
        cli::write_text_file(tr_out, aumol::io::serialize_hypotheses(hyps));
        std::cout << hyps.size() << " hypotheses written to " << tr_out << "\n";
      } else if (*tr_audio_opt) {
        std::cout << cli::transcribe_file(m, tr_audio, tr_prompt) << "\n";
      } else {
        throw aumol::ConfigError("give an audio file or --manifest");
      }
    } else if (*evaluate) {
      const auto agg = ev_macro ? aumol::eval::EwerAggregation::macro : aumol::eval::EwerAggregation::micro;
      aumol::eval::EvalReport rep;
      if (*rec_opt) {
        rep = aumol::eval::evaluate(aumol::io::parse_eval_records(aumol::io::read_text(ev_records), ev_records),
                                    ev_model, agg);
      } else if (*ref_opt) {
        rep = cli::evaluate_files(ev_ref, ev_hyp, ev_model, agg);
      } else {
        throw aumol::ConfigError("give --ref and --hyp, or --records");
      }
      const auto text = cli::render_report(rep, cli::report_format_from_string(ev_format));
      if (!ev_out.empty()) cli::write_text_file(ev_out, text);
      std::cout << text;
    } else if (*inspect) {
      const auto c = aumol::io::read_checkpoint(ic_path);
      std::cout << (ic_format == "structured" ? cli::describe_checkpoint(c).dump(2) + "\n"
                                              : cli::describe_checkpoint_text(c));
    }
  } catch (const aumol::TrainingAborted& e) {
    spdlog::error("{}", e.what());
    return 3;
  } catch (const aumol::ConfigError& e) {
    spdlog::error("{}", e.what());
    return 2;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 0;
}
