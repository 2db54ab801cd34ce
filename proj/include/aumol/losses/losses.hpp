#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aumol/ad/ops.hpp"

namespace aumol::losses {

using ad::DiffArray;
using ad::Node;

/// Mean over unmasked rows of -log softmax(logits[row])[labels[row]].
inline DiffArray output_loss(const DiffArray& logits, std::span<const std::int32_t> labels,
                             std::span<const std::uint8_t> mask) {
  if (logits.ndim() != 2) throw ShapeError("output_loss: logits must be a matrix, got " + ad::shape_str(logits.shape()));
  const std::size_t n = logits.shape()[0], v = logits.shape()[1];
  if (labels.size() != n || mask.size() != n) {
    throw ShapeError("output_loss: " + std::to_string(n) + " logit rows but " + std::to_string(labels.size()) +
                     " labels and " + std::to_string(mask.size()) + " mask entries");
  }
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (!mask[i]) continue;
    if (labels[i] < 0 || static_cast<std::size_t>(labels[i]) >= v) {
      throw ContractError("output_loss: label " + std::to_string(labels[i]) + " at position " + std::to_string(i) +
                          " outside [0, " + std::to_string(v) + ")");
    }
    rows.push_back(i);
  }
  if (rows.empty()) throw ContractError("output_loss: no unmasked positions");

  std::vector<double> probs(rows.size() * v);
  double total = 0.0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const double* row = logits.data().data() + rows[r] * v;
    double top = row[0];
    for (std::size_t j = 1; j < v; ++j) top = std::max(top, row[j]);
    double z = 0.0;
    for (std::size_t j = 0; j < v; ++j) z += std::exp(row[j] - top);
    const double log_z = top + std::log(z);
    for (std::size_t j = 0; j < v; ++j) probs[r * v + j] = std::exp(row[j] - log_z);
    total += log_z - row[labels[rows[r]]];
  }
  const double inv = 1.0 / static_cast<double>(rows.size());
  std::vector<std::int32_t> targets;
  for (auto i : rows) targets.push_back(labels[i]);
  return ad::make_result(
      "output_loss", {}, {total * inv}, {logits},
      [v, inv, rows = std::move(rows), probs = std::move(probs), targets = std::move(targets)](Node& self) {
        auto& g = self.inputs[0]->ensure_grad();
        const double scale = self.grad[0] * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
          double* dst = g.data() + rows[r] * v;
          for (std::size_t j = 0; j < v; ++j) dst[j] += scale * probs[r * v + j];
          dst[targets[r]] -= scale;
        }
      });
}

struct AlignmentResult {
  DiffArray loss;         // l1 + cosine_term
  DiffArray l1;           // mean |e_t - e_u|
  DiffArray cosine_term;  // 1 - mean_t cos(e_t[t], e_u[t])
  double l1_sum = 0.0;    // sum |e_t - e_u|, reported alongside the mean
  bool zero_norm = false;
};

/// L1 (element mean) plus one minus the per-step cosine averaged over time.
/// A zero-norm step has cosine 0 and sets `zero_norm`.
inline AlignmentResult alignment_loss(const DiffArray& e_t, const DiffArray& e_u) {
  if (e_t.ndim() != 2 || e_t.shape() != e_u.shape()) {
    throw ShapeError("alignment_loss: e_t " + ad::shape_str(e_t.shape()) + " vs e_u " + ad::shape_str(e_u.shape()));
  }
  AlignmentResult r;
  r.l1 = ad::l1_distance(e_t, e_u);
  r.cosine_term = ad::sub(DiffArray::scalar(1.0), ad::mean(ad::cosine_similarity(e_t, e_u)));
  r.loss = ad::add(r.l1, r.cosine_term);
  const std::size_t d = e_t.shape()[1];
  for (std::size_t t = 0; t < e_t.shape()[0]; ++t) {
    double a = 0.0, b = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      a += e_t.at(t, j) * e_t.at(t, j);
      b += e_u.at(t, j) * e_u.at(t, j);
    }
    if (a == 0.0 || b == 0.0) r.zero_norm = true;
  }
  for (std::size_t i = 0; i < e_t.size(); ++i) r.l1_sum += std::abs(e_t[i] - e_u[i]);
  return r;
}

/// (t_out x t_in) linear-interpolation matrix with aligned end points.
inline DiffArray interpolation_matrix(std::size_t t_out, std::size_t t_in) {
  if (t_out == 0 || t_in == 0) throw ShapeError("interpolation_matrix: empty sequence");
  std::vector<double> w(t_out * t_in, 0.0);
  for (std::size_t i = 0; i < t_out; ++i) {
    if (t_in == 1 || t_out == 1) {
      w[i * t_in] = 1.0;
      continue;
    }
    const double pos = static_cast<double>(i) * static_cast<double>(t_in - 1) / static_cast<double>(t_out - 1);
    const auto lo = std::min(static_cast<std::size_t>(pos), t_in - 2);
    const double frac = pos - static_cast<double>(lo);
    w[i * t_in + lo] += 1.0 - frac;
    w[i * t_in + lo + 1] += frac;
  }
  return DiffArray::matrix(t_out, t_in, std::move(w));
}

/// Resamples the shorter sequence along time to the longer length, then
/// scores against a constant e_u (no gradient reaches the text side).
inline AlignmentResult matched_alignment_loss(const DiffArray& e_t, const DiffArray& e_u) {
  if (e_t.ndim() != 2 || e_u.ndim() != 2 || e_t.shape()[1] != e_u.shape()[1]) {
    throw ShapeError("alignment_loss: e_t " + ad::shape_str(e_t.shape()) + " vs e_u " + ad::shape_str(e_u.shape()));
  }
  DiffArray target = e_u.detach();
  DiffArray audio = e_t;
  const std::size_t ta = e_t.shape()[0], tu = e_u.shape()[0];
  if (tu < ta) target = ad::matmul(interpolation_matrix(ta, tu), target);
  if (ta < tu) audio = ad::matmul(interpolation_matrix(tu, ta), audio);
  return alignment_loss(audio, target);
}

struct LossBreakdown {
  double output_loss = 0.0;
  double alignment_loss = 0.0;
  double alpha = 1.0;
  double total = 0.0;
};

inline LossBreakdown total_loss(double out, double align, double alpha = 1.0) {
  return {out, align, alpha, out + alpha * align};
}

/// Graph form of total_loss; its value equals total_loss(...).total bit for bit.
inline DiffArray weighted_total(const DiffArray& out, const DiffArray& align, double alpha) {
  return ad::add(out, ad::scale(align, alpha));
}

}  // namespace aumol::losses
