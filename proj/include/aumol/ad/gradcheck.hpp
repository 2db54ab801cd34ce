#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "aumol/ad/diff_array.hpp"

namespace aumol::ad {

/// Max over coordinates of |g_analytic - g_numeric| / max(1, |g_numeric|),
/// where g_numeric is the central difference (f(x+eps) - f(x-eps)) / (2 eps).
inline double finite_diff_check(const std::function<DiffArray(const DiffArray&)>& f, const DiffArray& x,
                                double eps = 1e-5) {
  DiffArray leaf = DiffArray::from(x.shape(), std::vector<double>(x.data().begin(), x.data().end()), true);
  DiffArray loss = f(leaf);
  backward(loss);
  std::vector<double> analytic(leaf.size(), 0.0);
  if (leaf.has_grad()) std::copy(leaf.grad().begin(), leaf.grad().end(), analytic.begin());

  std::vector<double> probe(x.data().begin(), x.data().end());
  double worst = 0.0;
  for (std::size_t i = 0; i < probe.size(); ++i) {
    const double orig = probe[i];
    probe[i] = orig + eps;
    const double up = f(DiffArray::from(x.shape(), probe)).item();
    probe[i] = orig - eps;
    const double down = f(DiffArray::from(x.shape(), probe)).item();
    probe[i] = orig;
    const double numeric = (up - down) / (2.0 * eps);
    worst = std::max(worst, std::abs(analytic[i] - numeric) / std::max(1.0, std::abs(numeric)));
  }
  return worst;
}

/// Same measure over a set of leaves that a closure reads in place (model
/// parameters). Existing gradients on the leaves are cleared.
inline double finite_diff_check(const std::function<DiffArray()>& f, std::vector<DiffArray> leaves,
                                double eps = 1e-5) {
  for (auto& p : leaves) {
    p.set_requires_grad(true);
    p.zero_grad();
  }
  backward(f());
  double worst = 0.0;
  for (auto& p : leaves) {
    std::vector<double> analytic(p.size(), 0.0);
    if (p.has_grad()) std::copy(p.grad().begin(), p.grad().end(), analytic.begin());
    auto values = p.mutable_data();
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double orig = values[i];
      values[i] = orig + eps;
      const double up = f().item();
      values[i] = orig - eps;
      const double down = f().item();
      values[i] = orig;
      const double numeric = (up - down) / (2.0 * eps);
      worst = std::max(worst, std::abs(analytic[i] - numeric) / std::max(1.0, std::abs(numeric)));
    }
    p.zero_grad();
  }
  return worst;
}

}  // namespace aumol::ad
