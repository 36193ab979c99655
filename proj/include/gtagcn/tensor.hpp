#pragma once

#include "gtagcn/types.hpp"

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gtagcn {

class Tape;

namespace detail {

struct TensorNode {
    Matrix value;
    Matrix grad;
    bool has_grad = false;
    bool requires_grad = false;
    const Tape* tape = nullptr;  // set for values produced by a recorded op
    std::size_t op_index = 0;
};

}  // namespace detail

/// Dense 2-D array of doubles taking part in reverse-mode differentiation.
///
/// A Tensor is a cheap handle: copies share the same storage and gradient.
/// Leaves are created directly (constants or parameters); every other tensor
/// is the output of an operation recorded on a Tape.
class Tensor {
public:
    Tensor();
    explicit Tensor(Matrix value, bool requires_grad = false);

    static Tensor constant(Matrix value) { return Tensor(std::move(value), false); }
    static Tensor parameter(Matrix value) { return Tensor(std::move(value), true); }

    Index rows() const { return node_->value.rows(); }
    Index cols() const { return node_->value.cols(); }
    const Matrix& value() const { return node_->value; }

    // Direct write access for optimizers and checkpoint loading. Never call
    // while a backward pass that recorded this tensor is pending.
    Matrix& mutable_value() { return node_->value; }

    bool requires_grad() const { return node_->requires_grad; }
    bool is_leaf() const { return node_->tape == nullptr; }
    bool has_grad() const { return node_->has_grad; }

    /// Accumulated gradient. Throws if backward never reached this tensor.
    const Matrix& grad() const;
    void zero_grad();

    bool same_as(const Tensor& other) const { return node_ == other.node_; }

    /// A fresh leaf holding a copy of the value, cut off from any tape.
    Tensor detach() const { return Tensor(node_->value, false); }

private:
    friend class Tape;
    explicit Tensor(std::shared_ptr<detail::TensorNode> node) : node_(std::move(node)) {}
    std::shared_ptr<detail::TensorNode> node_;
};

/// Ordered record of differentiable operations.
///
/// Operations append themselves in execution order, so inputs always precede
/// the operations consuming them and a reverse sweep is a valid topological
/// order. A tape supports exactly one backward pass; call reset() to reuse it.
class Tape {
public:
    /// Receives the gradient of the op output and one slot per input. A slot
    /// is nullptr when that input needs no gradient; otherwise the rule must
    /// add (never assign) its contribution.
    using BackwardFn = std::function<void(const Matrix& grad_out, std::span<Matrix* const> grad_in)>;

    Tape() = default;
    Tape(const Tape&) = delete;
    Tape& operator=(const Tape&) = delete;

    /// Records an op producing `value` from `inputs`. Rejects non-finite
    /// values. When no input requires a gradient the result is a plain
    /// constant and nothing is recorded.
    Tensor record(std::string_view op, Matrix value, std::vector<Tensor> inputs, BackwardFn backward);

    /// Distributes d(loss)/d(leaf) into every requires_grad leaf reachable
    /// from `loss`, accumulating on top of any existing leaf gradient.
    void backward(const Tensor& loss);

    bool contains(const Tensor& t) const;
    std::size_t size() const { return entries_.size(); }
    bool consumed() const { return consumed_; }
    void reset();

private:
    struct Entry {
        std::string op;
        std::vector<std::shared_ptr<detail::TensorNode>> inputs;
        std::shared_ptr<detail::TensorNode> output;
        BackwardFn backward;
    };
    std::vector<Entry> entries_;
    bool consumed_ = false;
};

}  // namespace gtagcn
