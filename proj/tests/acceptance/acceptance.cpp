// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Positional arguments restrict the run to those criteria.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aumol/ad/diff_array.hpp"
#include "aumol/data/synth.hpp"
#include "aumol/dsp/features.hpp"
#include "aumol/eval/align.hpp"
#include "aumol/eval/metrics.hpp"
#include "aumol/eval/normalize.hpp"
#include "aumol/io/checkpoint.hpp"
#include "aumol/losses/losses.hpp"
#include "aumol/model/aumol.hpp"
#include "aumol/train/toy.hpp"
#include "aumol/train/trainer.hpp"
#include "support/edit_oracles.hpp"

namespace {

namespace ad = aumol::ad;
namespace dsp = aumol::dsp;
namespace eval = aumol::eval;
namespace io = aumol::io;
namespace losses = aumol::losses;
namespace model = aumol::model;
namespace nn = aumol::nn;
namespace oracle = aumol::testing;
namespace train = aumol::train;
using ad::DiffArray;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

DiffArray random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(r * c);
  for (auto& x : v) x = dist(rng);
  return DiffArray::matrix(r, c, std::move(v));
}

using Snapshot = std::map<std::string, std::vector<double>>;

Snapshot snapshot(const model::Model& m) {
  Snapshot s;
  for (const auto& p : m.parameters()) s[p.name] = std::vector<double>(p.value.data().begin(), p.value.data().end());
  return s;
}

bool same_bytes(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

bool same_bytes(const Snapshot& a, const Snapshot& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [name, v] : a) {
    const auto it = b.find(name);
    if (it == b.end() || !same_bytes(v, it->second)) return false;
  }
  return true;
}

void scramble(model::Model& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-0.5, 0.5);
  for (auto& p : m.parameters()) {
    auto v = p.value;
    for (auto& x : v.mutable_data()) x += dist(rng);
  }
}

// 1. Frame shape ---------------------------------------------------------------

Outcome frame_shape() {
  constexpr std::size_t kSamples = 30 * dsp::kTargetSampleRate;
  std::mt19937_64 rng(11);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<std::pair<std::string, dsp::AudioBuffer>> inputs;
  auto make = [&](const std::string& name, const std::function<double(std::size_t)>& f) {
    dsp::AudioBuffer a;
    a.samples.resize(kSamples);
    for (std::size_t i = 0; i < kSamples; ++i) a.samples[i] = f(i);
    inputs.emplace_back(name, std::move(a));
  };
  make("silence", [](std::size_t) { return 0.0; });
  make("noise", [&](std::size_t) { return std::clamp(0.3 * noise(rng), -1.0, 1.0); });
  make("quiet-noise", [&](std::size_t) { return 1e-6 * noise(rng); });
  make("tone", [](std::size_t i) { return 0.5 * std::sin(2.0 * M_PI * 440.0 * static_cast<double>(i) / 16000.0); });
  make("sweep", [](std::size_t i) {
    const double t = static_cast<double>(i) / 16000.0;
    return 0.8 * std::sin(2.0 * M_PI * (50.0 * t + 130.0 * t * t));
  });
  make("clicks", [&](std::size_t i) { return i % 4001 == 0 ? 1.0 : 0.0; });
  make("full-scale-square", [](std::size_t i) { return (i / 40) % 2 ? 1.0 : -1.0; });

  const dsp::Frontend frontend;
  Outcome o;
  double worst = 0.0;
  for (const auto& [name, audio] : inputs) {
    Stopwatch w;
    const auto f = frontend(audio);
    const double s = w.seconds();
    worst = std::max(worst, s);
    if (f.n_mels() != 80 || f.n_frames() != 3000) {
      o.pass = false;
      o.detail += name + " gave (" + std::to_string(f.n_mels()) + ", " + std::to_string(f.n_frames()) + "); ";
    }
    if (s >= 5.0) {
      o.pass = false;
      o.detail += name + " took " + fmt(s) + " s; ";
    }
  }
  o.detail += std::to_string(inputs.size()) + " inputs -> (80, 3000), slowest " + fmt(worst) + " s";
  return o;
}

// 2. Gradient suite -------------------------------------------------------------

model::ModelConfig tiny_config() {
  model::ModelConfig c;
  c.n_mels = 6;
  c.d_enc = 8;
  c.enc_layers = 1;
  c.d_hidden_adapter = 6;
  c.d_llm = 8;
  c.dec_layers = 1;
  c.n_heads = 2;
  c.max_audio_frames = 8;
  c.max_text_len = 6;
  return c;
}

struct GradReport {
  double worst = 0.0;  // after refinement
  long refined = 0;    // coordinates that needed a smaller step
};

// Central differences at eps = 1e-5. A coordinate over the bound is retried
// at 1e-6 and 1e-7: a stencil that straddles a ReLU kink converges as the
// step shrinks, a wrong backward rule does not.
GradReport refined_check(const std::function<DiffArray()>& f, std::vector<DiffArray> leaves, double bound) {
  for (auto& p : leaves) {
    p.set_requires_grad(true);
    p.zero_grad();
  }
  ad::backward(f());
  GradReport r;
  for (auto& p : leaves) {
    std::vector<double> analytic(p.size(), 0.0);
    if (p.has_grad()) std::copy(p.grad().begin(), p.grad().end(), analytic.begin());
    auto values = p.mutable_data();
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double orig = values[i];
      double err = 0.0;
      bool retried = false;
      for (double eps : {1e-5, 1e-6, 1e-7}) {
        values[i] = orig + eps;
        const double up = f().item();
        values[i] = orig - eps;
        const double down = f().item();
        values[i] = orig;
        const double numeric = (up - down) / (2.0 * eps);
        err = std::abs(analytic[i] - numeric) / std::max(1.0, std::abs(numeric));
        if (err < bound) break;
        retried = true;
      }
      r.refined += retried;
      r.worst = std::max(r.worst, err);
    }
  }
  return r;
}

GradReport refined_check(const std::function<DiffArray(const DiffArray&)>& f, const DiffArray& x, double bound) {
  auto leaf = x.clone();
  return refined_check([&] { return f(leaf); }, {leaf}, bound);
}

GradReport merge(GradReport a, const GradReport& b) {
  a.worst = std::max(a.worst, b.worst);
  a.refined += b.refined;
  return a;
}

struct GradFamily {
  std::string name;
  double bound;
  std::function<GradReport(std::uint64_t, double)> check;
};

GradReport adapter_error(std::uint64_t seed, double bound) {
  GradReport worst;
  for (auto variant : {model::AdapterVariant::full, model::AdapterVariant::single_fc, model::AdapterVariant::no_relu}) {
    auto c = tiny_config();
    c.adapter_variant = variant;
    auto m = model::Model::init(c, seed);
    std::mt19937_64 gen(seed + 100);
    auto x = random_matrix(gen, 4, 8);
    auto probe = random_matrix(gen, 4, 8);
    std::vector<DiffArray> leaves = {x, m.adapter.fc1.weight, m.adapter.fc1.bias, m.adapter.ln_gain, m.adapter.ln_bias};
    if (m.adapter.fc2) {
      leaves.push_back(m.adapter.fc2->weight);
      leaves.push_back(m.adapter.fc2->bias);
    }
    auto f = [&] { return ad::sum(ad::mul(model::adapt({x, model::Modality::audio}, m.adapter, variant).values, probe)); };
    worst = merge(worst, refined_check(f, leaves, bound));
  }
  return worst;
}

GradReport attention_error(std::uint64_t seed, double bound) {
  GradReport worst;
  for (bool causal : {false, true}) {
    nn::Rng rng(seed);
    auto p = nn::AttentionParams::init(rng, 8, 2);
    p.lora_q = nn::LoraAdapter::init(rng, 8, 8, 2, 4.0);
    p.lora_v = nn::LoraAdapter::init(rng, 8, 8, 2, 4.0);
    std::mt19937_64 gen(seed + 200);
    // LoRA B starts at zero, which would hide the A gradient.
    for (auto* b : {&p.lora_q->b, &p.lora_v->b}) {
      auto v = *b;
      for (auto& x : v.mutable_data()) x = std::uniform_real_distribution<double>(-0.3, 0.3)(gen);
    }
    auto x = random_matrix(gen, 5, 8);
    auto probe = random_matrix(gen, 5, 8);
    std::vector<nn::NamedParameter> params;
    p.collect("attn", nn::Component::decoder, params);
    std::vector<DiffArray> leaves = {x};
    for (const auto& np : params) leaves.push_back(np.value);
    auto f = [&] { return ad::sum(ad::mul(nn::multi_head_attention(x, p, causal), probe)); };
    worst = merge(worst, refined_check(f, leaves, bound));
  }
  return worst;
}

GradReport alignment_error(std::uint64_t seed, double bound) {
  std::mt19937_64 gen(seed + 300);
  auto a = random_matrix(gen, 4, 3);
  auto b = random_matrix(gen, 4, 3);
  auto short_text = random_matrix(gen, 2, 3);
  auto r = refined_check([&](const DiffArray& x) { return losses::alignment_loss(x, b).loss; }, a, bound);
  r = merge(r, refined_check([&](const DiffArray& x) { return losses::alignment_loss(a, x).loss; }, b, bound));
  return merge(r, refined_check([&](const DiffArray& x) { return losses::matched_alignment_loss(x, short_text).loss; },
                                a, bound));
}

GradReport output_loss_error(std::uint64_t seed, double bound) {
  std::mt19937_64 gen(seed + 400);
  auto logits = random_matrix(gen, 4, 6, -2.0, 2.0);
  std::vector<std::int32_t> labels;
  std::uniform_int_distribution<int> pick(0, 5);
  for (int i = 0; i < 4; ++i) labels.push_back(pick(gen));
  const std::vector<std::uint8_t> mask = {1, 0, 1, 1};
  return refined_check([&](const DiffArray& x) { return losses::output_loss(x, labels, mask); }, logits, bound);
}

// The token table also feeds the detached alignment target, a path finite
// differences see and backward does not, so it is left out.
GradReport end_to_end_error(std::uint64_t seed, double bound) {
  auto m = model::Model::init(tiny_config(), seed);
  scramble(m, seed + 500);
  std::mt19937_64 gen(seed + 600);
  auto features = random_matrix(gen, 6, 8);
  const std::vector<std::int32_t> prompt = {7};
  const std::vector<std::int32_t> target = {9, 10, model::Vocabulary::kEos};
  auto f = [&] {
    auto audio = model::adapt(model::encode_audio(m, features), m.adapter, m.cfg.adapter_variant);
    auto in = model::build_decoder_input(m, audio, prompt, target);
    auto out = losses::output_loss(model::decoder_forward(m, in.combined), in.labels, in.mask);
    auto align = losses::matched_alignment_loss(audio.values, model::embed_tokens(m, target).values).loss;
    return losses::weighted_total(out, align, 1.0);
  };
  std::vector<DiffArray> leaves = {features};
  for (const auto& p : m.parameters())
    if (p.name != "decoder.tokens") leaves.push_back(p.value);
  return refined_check(f, leaves, bound);
}

Outcome gradient_suite() {
  constexpr int kSeeds = 20;
  const std::vector<GradFamily> families = {{"adapter", 1e-6, adapter_error},
                                            {"attention", 1e-6, attention_error},
                                            {"alignment", 1e-6, alignment_error},
                                            {"output", 1e-6, output_loss_error},
                                            {"end-to-end", 1e-4, end_to_end_error}};
  Stopwatch w;
  Outcome o;
  for (const auto& fam : families) {
    GradReport r;
    for (int s = 0; s < kSeeds; ++s) r = merge(r, fam.check(static_cast<std::uint64_t>(s), fam.bound));
    if (!(r.worst < fam.bound)) o.pass = false;
    o.detail += fam.name + " " + fmt(r.worst) + (r.worst < fam.bound ? " < " : " >= ") + fmt(fam.bound);
    if (r.refined) o.detail += " (" + std::to_string(r.refined) + " kink-straddling coordinates refined)";
    o.detail += "; ";
  }
  const double s = w.seconds();
  if (s >= 120.0) o.pass = false;
  o.detail += std::to_string(kSeeds) + " seeds each, " + fmt(s) + " s";
  return o;
}

// 3. Loss identities -------------------------------------------------------------

Outcome loss_identities() {
  Outcome o;
  std::mt19937_64 gen(21);
  double self_worst = 0.0, scale_worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = 1 + gen() % 12, d = 1 + gen() % 16;
    auto x = random_matrix(gen, t, d, -3.0, 3.0);
    self_worst = std::max(self_worst, std::abs(losses::alignment_loss(x, x).loss.item()));
    double mean_abs = 0.0;
    for (double v : x.data()) mean_abs += std::abs(v);
    mean_abs /= static_cast<double>(x.size());
    const double c = std::uniform_real_distribution<double>(0.05, 5.0)(gen);
    const double got = losses::alignment_loss(x, ad::scale(x, c)).loss.item();
    scale_worst = std::max(scale_worst, std::abs(got - std::abs(c - 1.0) * mean_abs));
  }
  if (self_worst != 0.0) o.pass = false;
  if (!(scale_worst <= 1e-10)) o.pass = false;

  // Scalar form, graph form and every logged training step.
  long mismatches = 0, checked = 0;
  std::uniform_real_distribution<double> dist(0.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const double out = dist(gen), align = dist(gen);
    for (double alpha : {0.0, 1.0, 2.0}) {
      const double expected = out + alpha * align;
      mismatches += losses::total_loss(out, align, alpha).total != expected;
      mismatches +=
          losses::weighted_total(DiffArray::scalar(out), DiffArray::scalar(align), alpha).item() != expected;
      checked += 2;
    }
  }
  for (double alpha : {0.0, 1.0, 2.0}) {
    auto m = model::Model::init(model::ModelConfig{}, 31);
    const auto data = train::toy_examples(m);
    auto cfg = train::overfit_config(10);
    cfg.alpha = alpha;
    for (const auto& r : train::train(m, data, cfg, train::overfit_plan(10)).log) {
      mismatches += r.total != r.output_loss + alpha * r.alignment_loss;
      ++checked;
    }
  }
  if (mismatches != 0) o.pass = false;
  o.detail = "max |align(x,x)| " + fmt(self_worst) + ", max scale-identity error " + fmt(scale_worst) +
             ", total != out + alpha*align in " + std::to_string(mismatches) + "/" + std::to_string(checked);
  return o;
}

// 4. EWER worked example and edit-cost oracle -------------------------------------

Outcome ewer_and_oracle() {
  Outcome o;
  Stopwatch w;
  const auto rep = eval::evaluate({{"worked", "avacincaptad pegol", "pegol", {eval::make_entity("avacincaptad pegol", 0)}}});
  const double ewer = rep.ewer.value_or(-1.0);
  if (ewer != 0.5) o.pass = false;

  // Full cost table against the column oracle on every pair up to length 8.
  const auto seqs = oracle::all_sequences(8, 3);
  eval::Aligner aligner;
  long pairs = 0, cost_mismatch = 0;
  for (const auto& r : seqs) {
    const auto d = oracle::distances_from(r, 8, 3);
    for (std::size_t k = 0; k < seqs.size(); ++k) {
      cost_mismatch += aligner.distance(std::span<const int>(r), std::span<const int>(seqs[k])) != d[k];
    }
    pairs += static_cast<long>(seqs.size());
  }
  // Alignment scripts and WER counts on every pair up to length 5.
  const auto short_seqs = oracle::all_sequences(5, 3);
  long script_mismatch = 0, wer_mismatch = 0;
  const std::vector<std::string> words = {"alpha", "bravo", "charlie"};
  for (const auto& r : short_seqs) {
    const auto d = oracle::distances_from(r, 5, 3);
    eval::Tokens rt;
    for (int s : r) rt.push_back(words[static_cast<std::size_t>(s)]);
    for (std::size_t k = 0; k < short_seqs.size(); ++k) {
      script_mismatch += aligner.align(std::span<const int>(r), std::span<const int>(short_seqs[k])).cost() != d[k];
      if (r.empty()) continue;
      eval::Tokens ht;
      for (int s : short_seqs[k]) ht.push_back(words[static_cast<std::size_t>(s)]);
      const auto res = eval::wer(rt, ht);
      wer_mismatch += res.counts.errors() != d[k] ||
                      res.rate != static_cast<double>(d[k]) / static_cast<double>(r.size());
    }
  }
  const double s = w.seconds();
  if (cost_mismatch || script_mismatch || wer_mismatch || s >= 60.0) o.pass = false;
  o.detail = "worked-example EWER " + fmt(ewer) + "; " + std::to_string(cost_mismatch) + " cost mismatches in " +
             std::to_string(pairs) + " pairs (len <= 8), " + std::to_string(script_mismatch + wer_mismatch) +
             " script/WER mismatches (len <= 5); " + fmt(s) + " s";
  return o;
}

// 5. Normalization golden corpus --------------------------------------------------

Outcome golden_corpus() {
  Outcome o;
  std::ifstream in(std::string(AUMOL_TEST_DATA_DIR) + "/normalize_golden.txt", std::ios::binary);
  if (!in) return {false, "cannot open normalize_golden.txt"};
  std::string line;
  int cases = 0, wrong = 0, unstable = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto sep = line.find(" =>");
    if (sep == std::string::npos) return {false, "malformed golden line: " + line};
    const auto input = line.substr(0, sep);
    auto expected = line.substr(sep + 3);
    if (!expected.empty() && expected[0] == ' ') expected.erase(0, 1);
    const auto got = eval::join(eval::normalize(input));
    ++cases;
    if (got != expected) {
      ++wrong;
      if (wrong <= 3) o.detail += "[" + input + "] gave [" + got + "]; ";
    }
    if (eval::join(eval::normalize(got)) != got) ++unstable;
  }
  if (cases != 200 || wrong || unstable) o.pass = false;
  o.detail += std::to_string(cases - wrong) + "/" + std::to_string(cases) + " byte-exact, " +
              std::to_string(unstable) + " not idempotent";
  return o;
}

// 6. Staged-training integrity ----------------------------------------------------

Outcome staged_training() {
  Outcome o;
  auto m = model::Model::init(model::ModelConfig{}, 41);
  const auto data = train::toy_examples(m);

  // LoRA at init: stripping the adapters leaves every decoder output bit-identical.
  long lora_diffs = 0;
  {
    auto plain = m;
    for (auto& b : plain.dec_blocks) {
      b.attn.lora_q.reset();
      b.attn.lora_v.reset();
    }
    const auto prompt = model::prompt_ids(m, model::kDefaultPrompt);
    for (const auto& ex : data) {
      auto audio = model::adapt(model::encode_audio(m, ex.features), m.adapter, m.cfg.adapter_variant);
      auto in = model::build_decoder_input(m, audio, prompt, ex.target);
      const auto a = model::decoder_forward(m, in.combined);
      const auto b = model::decoder_forward(plain, in.combined);
      lora_diffs += !same_bytes(std::vector<double>(a.data().begin(), a.data().end()),
                                std::vector<double>(b.data().begin(), b.data().end()));
    }
  }

  train::TrainConfig cfg;
  cfg.batch_size = 2;
  cfg.warmup_steps = 5;
  cfg.base_lr = 1e-2;
  const auto plan = train::StagePlan::default_plan();
  std::vector<Snapshot> at_epoch_end = {snapshot(m)};
  train::TrainHooks hooks;
  hooks.on_epoch_end = [&](int, int, long) { at_epoch_end.push_back(snapshot(m)); };
  const auto res = train::train(m, data, cfg, plan, hooks);

  // Within each stage, parameters outside the stage's components keep their
  // bytes; inside, at least one tensor moves.
  long frozen_moved = 0, idle_stages = 0;
  const auto params = m.parameters();
  int first_epoch = 0;
  for (const auto& stage : plan.stages) {
    const int last_epoch = first_epoch + stage.epochs;
    std::size_t moved = 0;
    for (const auto& p : params) {
      const bool active = std::find(stage.trainable.begin(), stage.trainable.end(), p.component) != stage.trainable.end();
      for (int e = first_epoch; e < last_epoch; ++e) {
        const bool same = same_bytes(at_epoch_end[static_cast<std::size_t>(e)][p.name],
                                     at_epoch_end[static_cast<std::size_t>(e) + 1][p.name]);
        if (!active && !same) ++frozen_moved;
        if (active && !same) ++moved;
      }
    }
    idle_stages += moved == 0;
    first_epoch = last_epoch;
  }

  // Learning-rate log: unique maximum at warmup_steps, last value exactly 0.
  const auto peak = std::max_element(res.log.begin(), res.log.end(),
                                     [](const auto& a, const auto& b) { return a.lr < b.lr; });
  const long peak_count = std::count_if(res.log.begin(), res.log.end(), [&](const auto& r) { return r.lr == peak->lr; });
  const bool lr_ok = peak->step == cfg.warmup_steps && peak_count == 1 && peak->lr == cfg.base_lr &&
                     res.log.back().lr == 0.0;

  if (at_epoch_end.size() != 5 || frozen_moved || idle_stages || lora_diffs || !lr_ok) o.pass = false;
  o.detail = std::to_string(at_epoch_end.size() - 1) + " epochs, " + std::to_string(frozen_moved) +
             " frozen tensors changed, " + std::to_string(idle_stages) + " stages without updates; LoRA-at-init " +
             std::to_string(lora_diffs) + "/" + std::to_string(data.size()) + " outputs differ; lr peak at step " +
             std::to_string(peak->step) + " (warmup " + std::to_string(cfg.warmup_steps) + "), final lr " +
             fmt(res.log.back().lr);
  return o;
}

// 7. Overfit sanity ---------------------------------------------------------------

struct OverfitRun {
  Snapshot params;
  std::vector<train::LogRecord> log;
  std::vector<std::string> hyps;
  double seconds = 0.0;
};

OverfitRun overfit_run(int steps, double alpha, bool transcribe) {
  Stopwatch w;
  auto m = model::Model::init(model::ModelConfig{}, 1);
  const auto data = train::toy_examples(m);
  auto cfg = train::overfit_config(steps);
  cfg.alpha = alpha;
  OverfitRun run;
  run.log = train::train(m, data, cfg, train::overfit_plan(steps)).log;
  run.params = snapshot(m);
  if (transcribe) {
    std::uint64_t i = 0;
    for (const auto& u : aumol::data::toy_corpus()) {
      run.hyps.push_back(model::greedy_transcribe(aumol::data::synth_utterance(u.transcript, 100 + i++), m));
    }
  }
  run.seconds = w.seconds();
  return run;
}

bool same_log(const std::vector<train::LogRecord>& a, const std::vector<train::LogRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::vector<double> x = {a[i].lr, a[i].output_loss, a[i].alignment_loss, a[i].total, a[i].grad_norm};
    const std::vector<double> y = {b[i].lr, b[i].output_loss, b[i].alignment_loss, b[i].total, b[i].grad_norm};
    if (!same_bytes(x, y)) return false;
  }
  return true;
}

Outcome overfit() {
  constexpr int kSteps = 2000;
  Outcome o;
  const auto first = overfit_run(kSteps, 1.0, true);
  const auto second = overfit_run(kSteps, 1.0, true);
  const auto corpus = aumol::data::toy_corpus();
  std::vector<eval::TranscriptRecord> records;
  int exact = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    records.push_back({corpus[i].id, corpus[i].transcript, first.hyps[i], {}});
    exact += first.hyps[i] == corpus[i].transcript;
  }
  const double corpus_wer = eval::evaluate(records).wer;
  const double final_loss = first.log.back().output_loss;
  const bool deterministic =
      same_bytes(first.params, second.params) && same_log(first.log, second.log) && first.hyps == second.hyps;
  if (!(final_loss < 0.05) || exact != static_cast<int>(corpus.size()) || corpus_wer != 0.0 || !deterministic ||
      first.seconds >= 600.0 || static_cast<int>(first.log.size()) != kSteps) {
    o.pass = false;
  }
  o.detail = std::to_string(first.log.size()) + " steps, output_loss " + fmt(final_loss) + ", " +
             std::to_string(exact) + "/" + std::to_string(corpus.size()) + " exact, corpus WER " + fmt(corpus_wer) +
             ", " + fmt(first.seconds) + " s per run, second run " + (deterministic ? "identical" : "DIFFERS");
  return o;
}

// 8. Alignment-weight direction ---------------------------------------------------

Outcome ablation_direction() {
  constexpr int kSteps = 600;
  Outcome o;
  auto violations = [](const std::vector<train::LogRecord>& log) {
    long n = 0;
    for (std::size_t i = log.size() - 100; i < log.size(); ++i) n += !(log[i].alignment_loss < log[i - 1].alignment_loss);
    return n;
  };
  const auto with = overfit_run(kSteps, 1.0, false);
  const auto without = overfit_run(kSteps, 0.0, false);
  const long v1 = violations(with.log);
  if (v1 != 0) o.pass = false;
  o.detail = "alpha=1: " + std::to_string(v1) + " non-decreasing steps in the last 100, alignment " +
             fmt(with.log[kSteps - 101].alignment_loss) + " -> " + fmt(with.log.back().alignment_loss) +
             "; alpha=0 (unconstrained): " + fmt(without.log[kSteps - 101].alignment_loss) + " -> " +
             fmt(without.log.back().alignment_loss);
  return o;
}

// 9. Checkpoint round trip ----------------------------------------------------------

Outcome checkpoint_round_trip() {
  constexpr int kModels = 50;
  constexpr int kFlipsPerModel = 400;
  Outcome o;
  Stopwatch w;
  std::mt19937_64 gen(91);
  long inexact = 0, undetected = 0, flips = 0;
  const std::vector<model::AdapterVariant> variants = {model::AdapterVariant::full, model::AdapterVariant::single_fc,
                                                       model::AdapterVariant::no_relu};
  for (int i = 0; i < kModels; ++i) {
    model::ModelConfig c;
    c.d_enc = 8 * static_cast<int>(1 + gen() % 4);
    c.d_llm = 8 * static_cast<int>(1 + gen() % 4);
    c.n_heads = static_cast<int>(1 + gen() % 2) * 2;
    c.enc_layers = static_cast<int>(1 + gen() % 2);
    c.dec_layers = static_cast<int>(1 + gen() % 2);
    c.d_hidden_adapter = static_cast<int>(4 + gen() % 12);
    c.adapter_variant = variants[gen() % variants.size()];
    c.lora_rank = static_cast<int>(1 + gen() % 4);
    c.max_audio_frames = 8 * static_cast<int>(1 + gen() % 4);
    c.max_text_len = static_cast<int>(4 + gen() % 8);
    auto m = model::Model::init(c, gen());
    scramble(m, gen());
    const int stage = static_cast<int>(gen() % 3);
    const long step = static_cast<long>(gen() % 100000);
    const auto bytes = io::encode_checkpoint(io::snapshot(m, stage, step));
    const auto decoded = io::decode_checkpoint(bytes, "model-" + std::to_string(i));
    const auto restored = io::model_from_checkpoint(decoded);
    const bool exact = same_bytes(snapshot(m), snapshot(restored)) && decoded.stage == stage && decoded.step == step &&
                       model::to_json(restored.cfg) == model::to_json(m.cfg) &&
                       io::encode_checkpoint(io::snapshot(restored, stage, step)) == bytes;
    inexact += !exact;

    std::uniform_int_distribution<std::size_t> pos(0, bytes.size() - 1);
    std::uniform_int_distribution<int> mask(1, 255);
    for (int k = 0; k < kFlipsPerModel; ++k) {
      auto bad = bytes;
      // The first model flips every position; the rest sample positions.
      const std::size_t p = i == 0 ? static_cast<std::size_t>(k) * bytes.size() / kFlipsPerModel : pos(gen);
      bad[p] = static_cast<char>(bad[p] ^ mask(gen));
      ++flips;
      try {
        io::decode_checkpoint(bad, "corrupt");
        ++undetected;
      } catch (const aumol::Error&) {
      }
    }
  }
  // Exhaustive pass over every byte of one small checkpoint.
  {
    auto c = tiny_config();
    auto m = model::Model::init(c, 92);
    const auto bytes = io::encode_checkpoint(io::snapshot(m, 1, 7));
    for (std::size_t p = 0; p < bytes.size(); ++p) {
      auto bad = bytes;
      bad[p] = static_cast<char>(bad[p] ^ static_cast<char>(1 + p % 255));
      ++flips;
      try {
        io::decode_checkpoint(bad, "corrupt");
        ++undetected;
      } catch (const aumol::Error&) {
      }
    }
  }
  if (inexact || undetected) o.pass = false;
  o.detail = std::to_string(kModels - inexact) + "/" + std::to_string(kModels) + " bit-exact, " +
             std::to_string(undetected) + "/" + std::to_string(flips) + " single-byte corruptions undetected; " +
             fmt(w.seconds()) + " s";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  std::vector<int> only;
  app.add_option("criteria", only, "Criterion numbers to run (default: all)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"frame shape", frame_shape},
      {"gradient suite", gradient_suite},
      {"loss identities", loss_identities},
      {"EWER worked example and edit-cost oracle", ewer_and_oracle},
      {"normalization golden corpus", golden_corpus},
      {"staged-training integrity", staged_training},
      {"overfit sanity", overfit},
      {"alignment-weight direction", ablation_direction},
      {"checkpoint round trip", checkpoint_round_trip}};

  const std::set<int> selected(only.begin(), only.end());
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(n)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << n << " " << criteria[i].first << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
