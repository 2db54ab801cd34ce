#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "aumol/ad/diff_array.hpp"

namespace aumol::ad {

namespace detail {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMap = Eigen::Map<const RowMat>;
using MutMap = Eigen::Map<RowMat>;

inline ConstMap as_mat(const std::vector<double>& v, std::size_t r, std::size_t c) {
  return ConstMap(v.data(), static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
}
inline MutMap as_mat(std::vector<double>& v, std::size_t r, std::size_t c) {
  return MutMap(v.data(), static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
}

inline void require_matrix(const char* op, const DiffArray& a) {
  if (a.ndim() != 2) throw ShapeError(std::string(op) + ": expected a matrix, got shape " + shape_str(a.shape()));
}

inline void require_same_shape(const char* op, const DiffArray& a, const DiffArray& b) {
  if (a.shape() != b.shape()) {
    throw ShapeError(std::string(op) + ": shape mismatch " + shape_str(a.shape()) + " vs " + shape_str(b.shape()));
  }
}

inline void accumulate(Node& into, std::span<const double> g) {
  auto& dst = into.ensure_grad();
  for (std::size_t i = 0; i < g.size(); ++i) dst[i] += g[i];
}

}  // namespace detail

/// (m x k) . (k x n)
inline DiffArray matmul(const DiffArray& a, const DiffArray& b) {
  detail::require_matrix("matmul", a);
  detail::require_matrix("matmul", b);
  const std::size_t m = a.shape()[0], k = a.shape()[1], n = b.shape()[1];
  if (b.shape()[0] != k) {
    throw ShapeError("matmul: inner dimensions differ " + shape_str(a.shape()) + " vs " + shape_str(b.shape()));
  }
  std::vector<double> out(m * n);
  detail::as_mat(out, m, n).noalias() = detail::as_mat(a.node()->value, m, k) * detail::as_mat(b.node()->value, k, n);
  return make_result("matmul", {m, n}, std::move(out), {a, b}, [m, k, n](Node& self) {
    Node& x = *self.inputs[0];
    Node& y = *self.inputs[1];
    auto g = detail::as_mat(std::as_const(self.grad), m, n);
    if (x.requires_grad) detail::as_mat(x.ensure_grad(), m, k).noalias() += g * detail::as_mat(y.value, k, n).transpose();
    if (y.requires_grad) detail::as_mat(y.ensure_grad(), k, n).noalias() += detail::as_mat(x.value, m, k).transpose() * g;
  });
}

/// (m x k) . (n x k)^T, the layout of a linear layer with weight (out x in).
inline DiffArray matmul_t(const DiffArray& a, const DiffArray& b) {
  detail::require_matrix("matmul_t", a);
  detail::require_matrix("matmul_t", b);
  const std::size_t m = a.shape()[0], k = a.shape()[1], n = b.shape()[0];
  if (b.shape()[1] != k) {
    throw ShapeError("matmul_t: inner dimensions differ " + shape_str(a.shape()) + " vs " + shape_str(b.shape()));
  }
  std::vector<double> out(m * n);
  detail::as_mat(out, m, n).noalias() =
      detail::as_mat(a.node()->value, m, k) * detail::as_mat(b.node()->value, n, k).transpose();
  return make_result("matmul_t", {m, n}, std::move(out), {a, b}, [m, k, n](Node& self) {
    Node& x = *self.inputs[0];
    Node& w = *self.inputs[1];
    auto g = detail::as_mat(std::as_const(self.grad), m, n);
    if (x.requires_grad) detail::as_mat(x.ensure_grad(), m, k).noalias() += g * detail::as_mat(w.value, n, k);
    if (w.requires_grad) detail::as_mat(w.ensure_grad(), n, k).noalias() += g.transpose() * detail::as_mat(x.value, m, k);
  });
}

inline DiffArray transpose(const DiffArray& a) {
  detail::require_matrix("transpose", a);
  const std::size_t r = a.shape()[0], c = a.shape()[1];
  std::vector<double> out(r * c);
  detail::as_mat(out, c, r) = detail::as_mat(a.node()->value, r, c).transpose();
  return make_result("transpose", {c, r}, std::move(out), {a}, [r, c](Node& self) {
    Node& x = *self.inputs[0];
    detail::as_mat(x.ensure_grad(), r, c) += detail::as_mat(std::as_const(self.grad), c, r).transpose();
  });
}

inline DiffArray add(const DiffArray& a, const DiffArray& b) {
  detail::require_same_shape("add", a, b);
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return make_result("add", a.shape(), std::move(out), {a, b}, [](Node& self) {
    for (auto& in : self.inputs) {
      if (in->requires_grad) detail::accumulate(*in, self.grad);
    }
  });
}

inline DiffArray sub(const DiffArray& a, const DiffArray& b) {
  detail::require_same_shape("sub", a, b);
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return make_result("sub", a.shape(), std::move(out), {a, b}, [](Node& self) {
    if (self.inputs[0]->requires_grad) detail::accumulate(*self.inputs[0], self.grad);
    if (self.inputs[1]->requires_grad) {
      auto& g = self.inputs[1]->ensure_grad();
      for (std::size_t i = 0; i < g.size(); ++i) g[i] -= self.grad[i];
    }
  });
}

/// Elementwise product.
inline DiffArray mul(const DiffArray& a, const DiffArray& b) {
  detail::require_same_shape("mul", a, b);
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
  return make_result("mul", a.shape(), std::move(out), {a, b}, [](Node& self) {
    Node& x = *self.inputs[0];
    Node& y = *self.inputs[1];
    if (x.requires_grad) {
      auto& g = x.ensure_grad();
      for (std::size_t i = 0; i < g.size(); ++i) g[i] += self.grad[i] * y.value[i];
    }
    if (y.requires_grad) {
      auto& g = y.ensure_grad();
      for (std::size_t i = 0; i < g.size(); ++i) g[i] += self.grad[i] * x.value[i];
    }
  });
}

inline DiffArray scale(const DiffArray& a, double s) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * s;
  return make_result("scale", a.shape(), std::move(out), {a}, [s](Node& self) {
    auto& g = self.inputs[0]->ensure_grad();
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += self.grad[i] * s;
  });
}

/// Adds a length-n vector to every row of an (m x n) matrix.
inline DiffArray add_row(const DiffArray& a, const DiffArray& row) {
  detail::require_matrix("add_row", a);
  const std::size_t m = a.shape()[0], n = a.shape()[1];
  if (row.size() != n || row.ndim() != 1) {
    throw ShapeError("add_row: shape mismatch " + shape_str(a.shape()) + " vs " + shape_str(row.shape()));
  }
  std::vector<double> out(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = a[i * n + j] + row[j];
  return make_result("add_row", a.shape(), std::move(out), {a, row}, [m, n](Node& self) {
    if (self.inputs[0]->requires_grad) detail::accumulate(*self.inputs[0], self.grad);
    if (self.inputs[1]->requires_grad) {
      auto& g = self.inputs[1]->ensure_grad();
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) g[j] += self.grad[i * n + j];
    }
  });
}

inline DiffArray relu(const DiffArray& a) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] > 0.0 ? a[i] : 0.0;
  return make_result("relu", a.shape(), std::move(out), {a}, [](Node& self) {
    Node& x = *self.inputs[0];
    auto& g = x.ensure_grad();
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (x.value[i] > 0.0) g[i] += self.grad[i];
    }
  });
}

inline constexpr double kLayerNormEps = 1e-5;

/// Normalizes each row to zero mean / unit variance, then applies gain and bias.
inline DiffArray layer_norm(const DiffArray& x, const DiffArray& gain, const DiffArray& bias,
                            double eps = kLayerNormEps) {
  if (x.ndim() == 0) throw ShapeError("layer_norm: scalar input");
  const std::size_t n = x.cols(), m = x.size() / n;
  if (gain.size() != n || bias.size() != n) {
    throw ShapeError("layer_norm: gain/bias " + shape_str(gain.shape()) + "/" + shape_str(bias.shape()) +
                     " do not match feature dim of " + shape_str(x.shape()));
  }
  std::vector<double> out(x.size());
  std::vector<double> xhat(x.size());
  std::vector<double> rstd(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double* row = x.data().data() + i * n;
    double mu = 0.0;
    for (std::size_t j = 0; j < n; ++j) mu += row[j];
    mu /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t j = 0; j < n; ++j) var += (row[j] - mu) * (row[j] - mu);
    var /= static_cast<double>(n);
    rstd[i] = 1.0 / std::sqrt(var + eps);
    for (std::size_t j = 0; j < n; ++j) {
      xhat[i * n + j] = (row[j] - mu) * rstd[i];
      out[i * n + j] = xhat[i * n + j] * gain[j] + bias[j];
    }
  }
  return make_result("layer_norm", x.shape(), std::move(out), {x, gain, bias},
                     [m, n, xhat = std::move(xhat), rstd = std::move(rstd)](Node& self) {
                       Node& in = *self.inputs[0];
                       Node& g = *self.inputs[1];
                       Node& b = *self.inputs[2];
                       const auto& dy = self.grad;
                       if (g.requires_grad) {
                         auto& dg = g.ensure_grad();
                         for (std::size_t i = 0; i < m; ++i)
                           for (std::size_t j = 0; j < n; ++j) dg[j] += dy[i * n + j] * xhat[i * n + j];
                       }
                       if (b.requires_grad) {
                         auto& db = b.ensure_grad();
                         for (std::size_t i = 0; i < m; ++i)
                           for (std::size_t j = 0; j < n; ++j) db[j] += dy[i * n + j];
                       }
                       if (in.requires_grad) {
                         auto& dx = in.ensure_grad();
                         std::vector<double> dxhat(n);
                         for (std::size_t i = 0; i < m; ++i) {
                           double mean_d = 0.0, mean_dx = 0.0;
                           for (std::size_t j = 0; j < n; ++j) {
                             dxhat[j] = dy[i * n + j] * g.value[j];
                             mean_d += dxhat[j];
                             mean_dx += dxhat[j] * xhat[i * n + j];
                           }
                           mean_d /= static_cast<double>(n);
                           mean_dx /= static_cast<double>(n);
                           for (std::size_t j = 0; j < n; ++j) {
                             dx[i * n + j] += rstd[i] * (dxhat[j] - mean_d - xhat[i * n + j] * mean_dx);
                           }
                         }
                       }
                     });
}

/// Row-wise softmax. With causal=true (square input) entry (i, j) is masked
/// to probability zero for j > i.
inline DiffArray softmax(const DiffArray& x, bool causal = false) {
  if (x.ndim() == 0) throw ShapeError("softmax: scalar input");
  const std::size_t n = x.cols(), m = x.size() / n;
  if (causal && (x.ndim() != 2 || m != n)) {
    throw ShapeError("softmax: causal mask needs a square matrix, got " + shape_str(x.shape()));
  }
  std::vector<double> out(x.size(), 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t len = causal ? i + 1 : n;
    const double* row = x.data().data() + i * n;
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < len; ++j) mx = std::max(mx, row[j]);
    double z = 0.0;
    for (std::size_t j = 0; j < len; ++j) {
      out[i * n + j] = std::exp(row[j] - mx);
      z += out[i * n + j];
    }
    for (std::size_t j = 0; j < len; ++j) out[i * n + j] /= z;
  }
  return make_result("softmax", x.shape(), out, {x}, [m, n, y = out](Node& self) {
    auto& dx = self.inputs[0]->ensure_grad();
    for (std::size_t i = 0; i < m; ++i) {
      double dot = 0.0;
      for (std::size_t j = 0; j < n; ++j) dot += self.grad[i * n + j] * y[i * n + j];
      for (std::size_t j = 0; j < n; ++j) dx[i * n + j] += y[i * n + j] * (self.grad[i * n + j] - dot);
    }
  });
}

inline DiffArray sum(const DiffArray& a) {
  double s = 0.0;
  for (double v : a.data()) s += v;
  return make_result("sum", {}, {s}, {a}, [](Node& self) {
    auto& g = self.inputs[0]->ensure_grad();
    for (double& v : g) v += self.grad[0];
  });
}

inline DiffArray mean(const DiffArray& a) {
  double s = 0.0;
  for (double v : a.data()) s += v;
  const double inv = 1.0 / static_cast<double>(a.size());
  return make_result("mean", {}, {s * inv}, {a}, [inv](Node& self) {
    auto& g = self.inputs[0]->ensure_grad();
    for (double& v : g) v += self.grad[0] * inv;
  });
}

/// mean_i |a_i - b_i| as a scalar. The subgradient at a_i == b_i is zero.
inline DiffArray l1_distance(const DiffArray& a, const DiffArray& b) {
  detail::require_same_shape("l1_distance", a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  const double inv = 1.0 / static_cast<double>(a.size());
  return make_result("l1_distance", {}, {s * inv}, {a, b}, [inv](Node& self) {
    Node& x = *self.inputs[0];
    Node& y = *self.inputs[1];
    const double g0 = self.grad[0] * inv;
    for (std::size_t i = 0; i < x.value.size(); ++i) {
      const double d = x.value[i] - y.value[i];
      const double sgn = d > 0.0 ? 1.0 : (d < 0.0 ? -1.0 : 0.0);
      if (x.requires_grad) x.ensure_grad()[i] += g0 * sgn;
      if (y.requires_grad) y.ensure_grad()[i] -= g0 * sgn;
    }
  });
}

/// Cosine similarity of corresponding rows: (m x n), (m x n) -> (m). Vector
/// inputs give a scalar. A zero-norm row has similarity 0 and no gradient.
inline DiffArray cosine_similarity(const DiffArray& a, const DiffArray& b) {
  detail::require_same_shape("cosine_similarity", a, b);
  if (a.ndim() == 0) throw ShapeError("cosine_similarity: scalar input");
  const std::size_t n = a.cols(), m = a.size() / n;
  std::vector<double> out(m), na(m), nb(m);
  for (std::size_t i = 0; i < m; ++i) {
    double dot = 0.0, aa = 0.0, bb = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      dot += a[i * n + j] * b[i * n + j];
      aa += a[i * n + j] * a[i * n + j];
      bb += b[i * n + j] * b[i * n + j];
    }
    na[i] = std::sqrt(aa);
    nb[i] = std::sqrt(bb);
    // sqrt(aa * bb) makes cos(x, x) exactly 1, since sqrt(fl(s * s)) == s;
    // the product of norms covers the range where aa * bb under/overflows.
    const double joint = std::sqrt(aa * bb);
    const double denom = joint > 0.0 && std::isfinite(joint) ? joint : na[i] * nb[i];
    out[i] = (na[i] > 0.0 && nb[i] > 0.0) ? dot / denom : 0.0;
  }
  Shape shape = a.ndim() == 1 ? Shape{} : Shape{m};
  return make_result("cosine_similarity", shape, out, {a, b},
                     [m, n, c = out, na = std::move(na), nb = std::move(nb)](Node& self) {
                       Node& x = *self.inputs[0];
                       Node& y = *self.inputs[1];
                       for (std::size_t i = 0; i < m; ++i) {
                         if (na[i] == 0.0 || nb[i] == 0.0) continue;
                         const double g = self.grad[i];
                         const double inv = 1.0 / (na[i] * nb[i]);
                         for (std::size_t j = 0; j < n; ++j) {
                           const double xv = x.value[i * n + j], yv = y.value[i * n + j];
                           if (x.requires_grad) x.ensure_grad()[i * n + j] += g * (yv * inv - c[i] * xv / (na[i] * na[i]));
                           if (y.requires_grad) y.ensure_grad()[i * n + j] += g * (xv * inv - c[i] * yv / (nb[i] * nb[i]));
                         }
                       }
                     });
}

/// Concatenates matrices along rows (axis 0) or columns (axis 1).
inline DiffArray concat(const std::vector<DiffArray>& parts, int axis) {
  if (parts.empty()) throw ShapeError("concat: no inputs");
  if (axis != 0 && axis != 1) throw ShapeError("concat: axis must be 0 or 1");
  for (const auto& p : parts) detail::require_matrix("concat", p);
  const int other = 1 - axis;
  const std::size_t fixed = parts[0].shape()[other];
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.shape()[other] != fixed) {
      throw ShapeError("concat: shape mismatch " + shape_str(parts[0].shape()) + " vs " + shape_str(p.shape()));
    }
    total += p.shape()[axis];
  }
  const std::size_t rows = axis == 0 ? total : fixed;
  const std::size_t cols = axis == 0 ? fixed : total;
  std::vector<double> out(rows * cols);
  std::vector<std::size_t> offsets;
  std::size_t off = 0;
  for (const auto& p : parts) {
    offsets.push_back(off);
    const std::size_t pr = p.shape()[0], pc = p.shape()[1];
    for (std::size_t i = 0; i < pr; ++i)
      for (std::size_t j = 0; j < pc; ++j) {
        const std::size_t r = axis == 0 ? off + i : i;
        const std::size_t c = axis == 0 ? j : off + j;
        out[r * cols + c] = p[i * pc + j];
      }
    off += p.shape()[axis];
  }
  return make_result("concat", {rows, cols}, std::move(out), parts, [axis, cols, offsets](Node& self) {
    for (std::size_t k = 0; k < self.inputs.size(); ++k) {
      Node& p = *self.inputs[k];
      if (!p.requires_grad) continue;
      auto& g = p.ensure_grad();
      const std::size_t pr = p.shape[0], pc = p.shape[1];
      for (std::size_t i = 0; i < pr; ++i)
        for (std::size_t j = 0; j < pc; ++j) {
          const std::size_t r = axis == 0 ? offsets[k] + i : i;
          const std::size_t c = axis == 0 ? j : offsets[k] + j;
          g[i * pc + j] += self.grad[r * cols + c];
        }
    }
  });
}

/// Rows [begin, end) of a matrix.
inline DiffArray slice_rows(const DiffArray& a, std::size_t begin, std::size_t end) {
  detail::require_matrix("slice_rows", a);
  const std::size_t r = a.shape()[0], c = a.shape()[1];
  if (begin > end || end > r) {
    throw ShapeError("slice_rows: range [" + std::to_string(begin) + ", " + std::to_string(end) +
                     ") out of bounds for " + shape_str(a.shape()));
  }
  std::vector<double> out(a.data().begin() + static_cast<std::ptrdiff_t>(begin * c),
                          a.data().begin() + static_cast<std::ptrdiff_t>(end * c));
  return make_result("slice_rows", {end - begin, c}, std::move(out), {a}, [begin, c](Node& self) {
    auto& g = self.inputs[0]->ensure_grad();
    for (std::size_t i = 0; i < self.grad.size(); ++i) g[begin * c + i] += self.grad[i];
  });
}

/// Columns [begin, end) of a matrix.
inline DiffArray slice_cols(const DiffArray& a, std::size_t begin, std::size_t end) {
  detail::require_matrix("slice_cols", a);
  const std::size_t r = a.shape()[0], c = a.shape()[1];
  if (begin > end || end > c) {
    throw ShapeError("slice_cols: range [" + std::to_string(begin) + ", " + std::to_string(end) +
                     ") out of bounds for " + shape_str(a.shape()));
  }
  const std::size_t w = end - begin;
  std::vector<double> out(r * w);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < w; ++j) out[i * w + j] = a[i * c + begin + j];
  return make_result("slice_cols", {r, w}, std::move(out), {a}, [r, c, w, begin](Node& self) {
    auto& g = self.inputs[0]->ensure_grad();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < w; ++j) g[i * c + begin + j] += self.grad[i * w + j];
  });
}

/// Gathers rows of an embedding table: (V x d), ids -> (len(ids) x d).
inline DiffArray embedding_lookup(const DiffArray& table, std::span<const std::int32_t> ids) {
  detail::require_matrix("embedding_lookup", table);
  const std::size_t v = table.shape()[0], d = table.shape()[1];
  std::vector<double> out(ids.size() * d);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0 || static_cast<std::size_t>(ids[i]) >= v) {
      throw ShapeError("embedding_lookup: id " + std::to_string(ids[i]) + " outside table " + shape_str(table.shape()));
    }
    std::copy_n(table.data().begin() + static_cast<std::ptrdiff_t>(ids[i] * d), d,
                out.begin() + static_cast<std::ptrdiff_t>(i * d));
  }
  std::vector<std::int32_t> idv(ids.begin(), ids.end());
  return make_result("embedding_lookup", {ids.size(), d}, std::move(out), {table}, [d, idv](Node& self) {
    auto& g = self.inputs[0]->ensure_grad();
    for (std::size_t i = 0; i < idv.size(); ++i)
      for (std::size_t j = 0; j < d; ++j) g[static_cast<std::size_t>(idv[i]) * d + j] += self.grad[i * d + j];
  });
}

}  // namespace aumol::ad
