#pragma once

#include "gtagcn/tensor.hpp"

#include <span>
#include <vector>

namespace gtagcn {

// Differentiable dense operations. Every function records onto the given tape
// and returns its output; shapes are validated up front (DimensionError).

Tensor matmul(Tape& tape, const Tensor& a, const Tensor& b);

/// Elementwise sum. `b` is either the same shape as `a` or a 1 x cols row
/// broadcast over every row of `a`.
Tensor add(Tape& tape, const Tensor& a, const Tensor& b);

/// Sum of equally shaped tensors.
Tensor add_n(Tape& tape, std::span<const Tensor> terms);

Tensor add_scalar(Tape& tape, const Tensor& x, double c);
Tensor scale(Tape& tape, const Tensor& x, double c);
Tensor mul(Tape& tape, const Tensor& a, const Tensor& b);

/// Sum of all entries, as a 1x1 tensor.
Tensor sum(Tape& tape, const Tensor& x);

/// max(0, x); the derivative at exactly 0 is taken as 0.
Tensor relu(Tape& tape, const Tensor& x);

/// Inverted dropout: survivors are scaled by 1/(1-p) during training so
/// evaluation is the identity. p must lie in [0, 1).
Tensor dropout(Tape& tape, const Tensor& x, double p, bool training, Rng& rng);

struct BatchNormState {
    static constexpr double kEpsilon = 1e-5;
    static constexpr double kMomentum = 0.1;

    RowVector running_mean;
    RowVector running_var;
    // Running statistics start from the first training batch rather than
    // from (0, 1).
    bool initialized = false;
};

/// Per-column batch normalization with affine gamma/beta (both 1 x cols).
/// Training mode uses the biased batch statistics and updates `state`;
/// evaluation mode uses the running statistics.
Tensor batch_norm(Tape& tape, const Tensor& x, const Tensor& gamma, const Tensor& beta, BatchNormState& state,
                  bool training);

/// Row-wise log-softmax with max subtraction.
Tensor log_softmax_rows(Tape& tape, const Tensor& x);

/// Mean of -logp[i, labels[i]] over the rows listed in `rows`.
Tensor nll_loss_masked(Tape& tape, const Tensor& logp, std::span<const int> labels, std::span<const Index> rows);

}  // namespace gtagcn
