#pragma once

#include "gtagcn/layers.hpp"

#include <cmath>
#include <optional>

namespace gtagcn {

// Generalized aggregation: epsilon-shifted ReLU messages, SoftMax(beta) and
// PowerMean(p) aggregators, and message normalization. The free templates
// below act on plain Eigen rows (one message per row of the argument); the
// tape-level pieces at the bottom compose them into a trainable layer.

template <typename Derived>
RowVectorX<typename Derived::Scalar> gen_message(const Eigen::MatrixBase<Derived>& h_u, typename Derived::Scalar epsilon) {
    using Scalar = typename Derived::Scalar;
    return (h_u.derived().array().max(Scalar(0)) + epsilon).matrix();
}

/// ReLU(h_u + h_e) + epsilon, with the edge feature present.
template <typename DerivedU, typename DerivedE>
RowVectorX<typename DerivedU::Scalar> gen_message(const Eigen::MatrixBase<DerivedU>& h_u,
                                                  const Eigen::MatrixBase<DerivedE>& h_e,
                                                  typename DerivedU::Scalar epsilon) {
    if (h_u.size() != h_e.size()) throw DimensionError("gen_message: node and edge feature widths differ");
    using Scalar = typename DerivedU::Scalar;
    return ((h_u.derived().array() + h_e.derived().array()).max(Scalar(0)) + epsilon).matrix();
}

/// Per coordinate c: sum_u softmax_u(beta * m[u, c]) * m[u, c].
template <typename Derived>
RowVectorX<typename Derived::Scalar> softmax_aggregate(const Eigen::MatrixBase<Derived>& messages,
                                                       typename Derived::Scalar beta) {
    using Scalar = typename Derived::Scalar;
    if (messages.rows() == 0) throw DimensionError("softmax_aggregate: empty message set");
    const auto m = messages.derived().array();
    const auto z = (beta * m).eval();
    const auto shifted = (z.rowwise() - z.colwise().maxCoeff()).exp().eval();
    const auto denom = shifted.colwise().sum().eval();
    RowVectorX<Scalar> out = ((shifted * m).colwise().sum() / denom).matrix();
    return out;
}

/// Per coordinate: (mean_u m[u, c]^p)^(1/p). Messages must be positive.
template <typename Derived>
RowVectorX<typename Derived::Scalar> powermean_aggregate(const Eigen::MatrixBase<Derived>& messages,
                                                         typename Derived::Scalar p) {
    using Scalar = typename Derived::Scalar;
    if (messages.rows() == 0) throw DimensionError("powermean_aggregate: empty message set");
    if (p == Scalar(0)) throw ConfigError("powermean_aggregate: p must be nonzero");
    if ((messages.derived().array() <= Scalar(0)).any()) {
        throw NumericalError("powermean_aggregate: messages must be strictly positive");
    }
    const auto mean = messages.derived().array().pow(p).colwise().mean();
    RowVectorX<Scalar> out = mean.pow(Scalar(1) / p).matrix();
    return out;
}

/// h_v + s * |h_v| * m_v / |m_v|, before the MLP.
template <typename DerivedH, typename DerivedM>
RowVectorX<typename DerivedH::Scalar> message_norm(const Eigen::MatrixBase<DerivedH>& h_v,
                                                   const Eigen::MatrixBase<DerivedM>& m_v,
                                                   typename DerivedH::Scalar s) {
    const auto m_norm = m_v.norm();
    if (!(m_norm > 0)) throw NumericalError("message_norm: aggregated message has zero norm");
    return h_v + (s * h_v.norm() / m_norm) * m_v;
}

/// MLP(message_norm(h_v, m_v, s)) for a single node.
RowVector message_norm_update(const RowVector& h_v, const RowVector& m_v, double s, MlpBlock& mlp);

// ---------------------------------------------------------------------------

enum class Aggregation { softmax, powermean, mean, max };

struct GenAggregator {
    Aggregation kind = Aggregation::softmax;
    double beta = 1.0;
    double p = 1.0;
    double epsilon = 1e-7;
    std::optional<double> message_norm_scale;  // s; unset disables message normalization
};

/// Aggregates the rows of `messages` over each node's neighbors (the column
/// pattern of `structure`'s row; values are ignored). Nodes without neighbors
/// receive a zero row.
Tensor neighbor_aggregate(Tape& tape, const SparseMatrix& structure, const Tensor& messages, const GenAggregator& agg);

/// Row-wise h + s |h| m / |m|. Rows where m is zero contribute nothing.
Tensor message_norm(Tape& tape, const Tensor& h, const Tensor& m, double s);

struct GenLayer {
    GenAggregator aggregator;
    MlpBlock mlp;
};

GenLayer make_gen_layer(Index dim, const GenAggregator& aggregator, Rng& rng);

/// ReLU(h_u) + eps messages -> neighbor aggregation -> optional message
/// norm (otherwise h + m) -> MLP.
Tensor gen_forward(Tape& tape, GenLayer& layer, const SparseMatrix& structure, const Tensor& h, bool training);

}  // namespace gtagcn
