#pragma once

#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "aumol/errors.hpp"

namespace aumol::ad {

using Shape = std::vector<std::size_t>;

inline std::size_t shape_size(const Shape& s) {
  return std::accumulate(s.begin(), s.end(), std::size_t{1}, std::multiplies<>());
}

inline std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i];
  if (s.size() == 1) os << ',';
  os << ')';
  return os.str();
}

namespace detail {
inline std::uint64_t next_node_id() {
  static std::atomic<std::uint64_t> counter{0};
  return ++counter;
}
}  // namespace detail

/// One value in the computation record. Non-leaf nodes keep their inputs
/// alive and know how to push their gradient back into them.
struct Node {
  std::uint64_t id = detail::next_node_id();
  Shape shape;
  std::vector<double> value;
  std::vector<double> grad;  // empty until first accumulation
  bool requires_grad = false;
  const char* op = "leaf";
  std::vector<std::shared_ptr<Node>> inputs;
  std::function<void(Node&)> backward;

  bool has_grad() const { return !grad.empty(); }
  std::vector<double>& ensure_grad() {
    if (grad.empty()) grad.assign(value.size(), 0.0);
    return grad;
  }
};

/// Handle to a gradient-tracked array. Copies share the underlying node.
class DiffArray {
 public:
  DiffArray() = default;
  explicit DiffArray(std::shared_ptr<Node> node) : node_(std::move(node)) {}

  static DiffArray from(Shape shape, std::vector<double> values, bool requires_grad = false) {
    if (shape_size(shape) != values.size()) {
      throw ShapeError("array data of " + std::to_string(values.size()) + " elements does not fit shape " +
                       shape_str(shape));
    }
    auto n = std::make_shared<Node>();
    n->shape = std::move(shape);
    n->value = std::move(values);
    n->requires_grad = requires_grad;
    return DiffArray(std::move(n));
  }
  static DiffArray zeros(Shape shape, bool requires_grad = false) {
    auto size = shape_size(shape);
    return from(std::move(shape), std::vector<double>(size, 0.0), requires_grad);
  }
  static DiffArray scalar(double v, bool requires_grad = false) { return from({}, {v}, requires_grad); }
  static DiffArray vector(std::vector<double> v, bool requires_grad = false) {
    Shape s{v.size()};
    return from(std::move(s), std::move(v), requires_grad);
  }
  static DiffArray matrix(std::size_t rows, std::size_t cols, std::vector<double> v, bool requires_grad = false) {
    return from({rows, cols}, std::move(v), requires_grad);
  }

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const { return node_->shape; }
  std::size_t size() const { return node_->value.size(); }
  std::size_t ndim() const { return node_->shape.size(); }
  // Matrix view helpers; a vector is treated as a single row.
  std::size_t rows() const { return ndim() == 2 ? node_->shape[0] : 1; }
  std::size_t cols() const { return ndim() == 0 ? 1 : node_->shape.back(); }

  std::span<const double> data() const { return node_->value; }
  /// Direct mutation, for initializers and optimizers only. Never call on a
  /// node that is part of a live graph you still intend to differentiate.
  std::span<double> mutable_data() { return node_->value; }
  double operator[](std::size_t i) const { return node_->value[i]; }
  double at(std::size_t r, std::size_t c) const { return node_->value[r * cols() + c]; }
  double item() const {
    if (size() != 1) throw ContractError("item() on array of shape " + shape_str(shape()));
    return node_->value[0];
  }

  bool requires_grad() const { return node_->requires_grad; }
  void set_requires_grad(bool on) { node_->requires_grad = on; }
  bool has_grad() const { return node_->has_grad(); }
  std::span<const double> grad() const { return node_->grad; }
  std::span<double> mutable_grad() { return node_->ensure_grad(); }
  void zero_grad() { node_->grad.clear(); }

  std::uint64_t id() const { return node_->id; }
  const char* op() const { return node_->op; }
  Node* node() const { return node_.get(); }
  const std::shared_ptr<Node>& shared() const { return node_; }

  /// Same values, cut from the graph.
  DiffArray detach() const { return from(shape(), node_->value, false); }
  /// Deep copy of values keeping the requires_grad flag (used for snapshots).
  DiffArray clone() const { return from(shape(), node_->value, requires_grad()); }

 private:
  std::shared_ptr<Node> node_;
};

/// Builds the output node of an operation. Inputs and the backward rule are
/// only recorded when at least one input requires a gradient.
inline DiffArray make_result(const char* op, Shape shape, std::vector<double> value,
                             std::initializer_list<DiffArray> inputs, std::function<void(Node&)> backward) {
  for (double v : value) {
    if (!std::isfinite(v)) throw NumericError(std::string("non-finite value produced by ") + op);
  }
  auto n = std::make_shared<Node>();
  n->shape = std::move(shape);
  n->value = std::move(value);
  n->op = op;
  bool any = false;
  for (const auto& in : inputs) any = any || in.requires_grad();
  if (any) {
    n->requires_grad = true;
    n->inputs.reserve(inputs.size());
    for (const auto& in : inputs) n->inputs.push_back(in.shared());
    n->backward = std::move(backward);
  }
  return DiffArray(std::move(n));
}

/// Variadic-input variant of make_result (concat and friends).
inline DiffArray make_result(const char* op, Shape shape, std::vector<double> value, const std::vector<DiffArray>& inputs,
                             std::function<void(Node&)> backward) {
  for (double v : value) {
    if (!std::isfinite(v)) throw NumericError(std::string("non-finite value produced by ") + op);
  }
  auto n = std::make_shared<Node>();
  n->shape = std::move(shape);
  n->value = std::move(value);
  n->op = op;
  bool any = false;
  for (const auto& in : inputs) any = any || in.requires_grad();
  if (any) {
    n->requires_grad = true;
    for (const auto& in : inputs) n->inputs.push_back(in.shared());
    n->backward = std::move(backward);
  }
  return DiffArray(std::move(n));
}

/// Topologically ordered record of the gradient-carrying part of a graph.
/// Built on demand from a root; inputs always precede their consumers.
class Tape {
 public:
  static Tape record(const DiffArray& root) {
    Tape tape;
    if (!root.requires_grad()) return tape;
    std::unordered_set<const Node*> seen;
    // Iterative post-order DFS; graphs can be thousands of ops deep.
    std::vector<std::pair<Node*, std::size_t>> stack;
    stack.emplace_back(root.node(), 0);
    seen.insert(root.node());
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < node->inputs.size()) {
        Node* child = node->inputs[next++].get();
        if (child->requires_grad && seen.insert(child).second) stack.emplace_back(child, 0);
      } else {
        tape.order_.push_back(node);
        stack.pop_back();
      }
    }
    return tape;
  }

  std::span<Node* const> nodes() const { return order_; }
  std::size_t size() const { return order_.size(); }

 private:
  std::vector<Node*> order_;
};

/// Accumulates d(loss)/d(leaf) into every reachable leaf with requires_grad.
inline void backward(const DiffArray& loss) {
  if (!loss.defined() || loss.size() != 1) {
    throw ContractError("backward() requires a scalar loss, got shape " +
                        (loss.defined() ? shape_str(loss.shape()) : std::string("<undefined>")));
  }
  if (!loss.requires_grad()) return;
  Tape tape = Tape::record(loss);
  auto nodes = tape.nodes();
  // Interior gradients are scratch for this pass.
  for (Node* n : nodes) {
    if (n->backward) n->grad.assign(n->value.size(), 0.0);
  }
  loss.node()->ensure_grad()[0] += 1.0;
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
    Node* n = *it;
    if (n->backward) n->backward(*n);
  }
  for (Node* n : nodes) {
    if (n->backward) {
      n->grad.clear();
      n->grad.shrink_to_fit();
    }
  }
}

}  // namespace aumol::ad
