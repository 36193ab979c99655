#pragma once

#include "gtagcn/graph.hpp"
#include "gtagcn/layers.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gtagcn {

enum class Operator { gtagcn, tagcn, gcn };

std::string_view to_string(Operator op);
/// Throws ConfigError for unknown names.
Operator parse_operator(std::string_view name);

struct ModelConfig {
    Operator op = Operator::gtagcn;
    int k = 6;
    Index hidden_dim = 16;
    int num_layers = 2;
    double dropout = 0.5;
    double epsilon = 1e-7;
    Readout readout = Readout::mean;
    // Unset: GCN normalizes A + I, GTAGCN/TAGCN normalize A.
    std::optional<bool> self_loops;
    bool symmetrize = true;
    bool per_power_weights = false;
    std::uint64_t seed = 1;

    bool uses_self_loops() const { return self_loops.value_or(op == Operator::gcn); }
    void validate() const;
};

struct ModelSnapshot {
    std::vector<Matrix> parameters;
    std::vector<BatchNormState> batch_norms;
};

/// input MLP (batch-normalized) -> num_layers operator layers, each fed
/// through dropout -> [readout, graph tasks only] -> prediction MLP ->
/// row-wise log-softmax.
///
/// Parameters are shared handles, so a Model is move-only; use snapshot() and
/// restore() to checkpoint.
class Model {
public:
    Model(const ModelConfig& config, Index input_dim, int num_classes);
    Model(Model&&) = default;
    Model& operator=(Model&&) = default;
    Model(const Model&) = delete;
    Model& operator=(const Model&) = delete;

    const ModelConfig& config() const { return config_; }
    Index input_dim() const { return input_dim_; }
    int num_classes() const { return num_classes_; }

    /// The operator this model expects: symmetrized (per config) and
    /// normalized with or without self-loops (per config).
    SparseMatrix prepare_adjacency(Index num_nodes, std::span<const Edge> edges) const;

    /// Node-level log-probabilities, num_nodes x num_classes.
    Tensor forward(Tape& tape, const SparseMatrix& adjacency, const Tensor& x, bool training, Rng& rng);

    /// Graph-level log-probabilities, num_graphs x num_classes.
    Tensor forward_graphs(Tape& tape, const SparseMatrix& adjacency, const Tensor& x,
                          std::span<const Index> graph_index, Index num_graphs, bool training, Rng& rng);

    /// Node representations after the operator stack (before readout and
    /// the prediction MLP).
    Tensor embed(Tape& tape, const SparseMatrix& adjacency, const Tensor& x, bool training, Rng& rng);

    std::vector<NamedTensor> named_parameters() const;
    std::vector<Tensor> parameters() const;
    std::vector<NamedBatchNorm> named_batch_norms();
    std::size_t parameter_count() const;

    ModelSnapshot snapshot();
    void restore(const ModelSnapshot& snapshot);

private:
    using OperatorLayer = std::variant<GtagcnLayer, TagcnLayer, GcnLayer>;

    ModelConfig config_;
    Index input_dim_ = 0;
    int num_classes_ = 0;
    MlpBlock input_mlp_;
    std::vector<OperatorLayer> layers_;
    MlpBlock prediction_mlp_;
};

Model build_model(const ModelConfig& config, Index input_dim, int num_classes);

}  // namespace gtagcn
