#pragma once

#include "gtagcn/csr.hpp"
#include "gtagcn/ops.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace gtagcn {

using NamedTensor = std::pair<std::string, Tensor>;
using NamedBatchNorm = std::pair<std::string, BatchNormState*>;

/// Uniform in +-sqrt(6 / (fan_in + fan_out)).
Matrix glorot_uniform(Index fan_in, Index fan_out, Rng& rng);

/// x W + b, with b broadcast over rows.
struct Affine {
    Tensor weight;  // in x out
    Tensor bias;    // 1 x out
};

Affine make_affine(Index in, Index out, Rng& rng);
Tensor affine_forward(Tape& tape, const Affine& layer, const Tensor& x);

/// Three affine stages: affine -> (BN) -> ReLU -> affine -> (BN) -> ReLU -> affine.
struct MlpBlock {
    std::array<Affine, 3> stages;
    bool batch_norm = false;
    std::array<Tensor, 2> bn_gamma;
    std::array<Tensor, 2> bn_beta;
    std::array<BatchNormState, 2> bn_state;

    Index in_dim() const { return stages[0].weight.rows(); }
    Index out_dim() const { return stages[2].weight.cols(); }
};

MlpBlock make_mlp(std::array<Index, 4> dims, bool batch_norm, Rng& rng);

/// Identity affines, no batch normalization: computes ReLU(x).
MlpBlock identity_mlp(Index dim);

Tensor mlp_forward(Tape& tape, MlpBlock& block, const Tensor& x, bool training);

/// MLP( sum_k ReLU(A^k H W + epsilon) ) for k = 0..K.
///
/// `weights` holds one matrix shared by every power, or K+1 matrices (one
/// per power) for the per-power ablation.
struct GtagcnLayer {
    int k = 0;
    double epsilon = 1e-7;
    std::vector<Tensor> weights;
    MlpBlock mlp;
};

struct GtagcnOptions {
    double epsilon = 1e-7;
    bool per_power_weights = false;
    bool mlp_batch_norm = false;
};

GtagcnLayer make_gtagcn_layer(Index in, Index out, int k, Rng& rng, const GtagcnOptions& options = {});

/// The pre-MLP sum of rectified power terms.
Tensor gtagcn_propagate(Tape& tape, const GtagcnLayer& layer, const SparseMatrix& adjacency, const Tensor& h);
Tensor gtagcn_forward(Tape& tape, GtagcnLayer& layer, const SparseMatrix& adjacency, const Tensor& h, bool training);

/// ReLU( sum_k A^k H G_k + 1 b ): the matrix form of a bank of K-localized
/// polynomial filters, one G_k per power.
struct TagcnLayer {
    int k = 0;
    std::vector<Tensor> filters;  // K+1 matrices, in x out
    Tensor bias;                  // 1 x out
};

TagcnLayer make_tagcn_layer(Index in, Index out, int k, Rng& rng);
Tensor tagcn_forward(Tape& tape, const TagcnLayer& layer, const SparseMatrix& adjacency, const Tensor& h);

/// ReLU(A H W); the final layer of a stack skips the ReLU (`activate` = false).
/// Expects an adjacency normalized with self-loops.
struct GcnLayer {
    Tensor weight;
};

GcnLayer make_gcn_layer(Index in, Index out, Rng& rng);
Tensor gcn_forward(Tape& tape, const GcnLayer& layer, const SparseMatrix& adjacency, const Tensor& h,
                   bool activate = true);

std::vector<NamedTensor> named_parameters(const MlpBlock& block, const std::string& prefix);
std::vector<NamedBatchNorm> named_batch_norms(MlpBlock& block, const std::string& prefix);

}  // namespace gtagcn
