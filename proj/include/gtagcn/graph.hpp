#pragma once

#include "gtagcn/csr.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gtagcn {

struct Graph {
    Index num_nodes = 0;
    std::vector<Edge> edges;
    Matrix x;  // num_nodes x num_features
    std::optional<int> y;

    Index num_features() const { return x.cols(); }

    /// Throws DatasetError when an edge endpoint or the feature row count is
    /// inconsistent with num_nodes.
    void validate() const;
};

enum class Split : std::uint8_t { none, train, val, test };

std::string_view to_string(Split s);
std::optional<Split> parse_split(std::string_view text);

/// Transductive node classification on one graph. Splits are stored as one
/// tag per node, so train/val/test are disjoint by construction.
struct NodeTask {
    Graph graph;
    std::vector<int> labels;
    std::vector<Split> split;
    int num_classes = 0;

    std::vector<Index> indices(Split s) const;
    std::vector<bool> mask(Split s) const;
    void validate() const;
};

/// Inductive graph classification. Every graph carries a label in
/// [0, num_classes); `split` is empty until assigned.
struct GraphTask {
    std::vector<Graph> graphs;
    int num_classes = 0;
    std::vector<Split> split;

    std::vector<Index> indices(Split s) const;
    Index num_features() const { return graphs.empty() ? 0 : graphs.front().num_features(); }
    void validate() const;
};

/// Seeded class-stratified assignment: `train_fraction` of each class goes to
/// training (the rest to test), then `val_fraction` of each class's training
/// share is moved to validation.
std::vector<Split> stratified_split(std::span<const int> labels, int num_classes, double train_fraction,
                                    double val_fraction, std::uint64_t seed);

/// Block-diagonal union of several graphs.
struct GraphBatch {
    Index num_nodes = 0;
    Index num_graphs = 0;
    std::vector<Edge> edges;            // offset into the merged numbering
    Matrix x;                           // stacked node features
    std::vector<Index> graph_index;     // source graph of every merged node
    std::vector<int> labels;            // per graph; -1 when unlabeled
};

GraphBatch batch_graphs(std::span<const Graph* const> graphs);
GraphBatch batch_graphs(std::span<const Graph> graphs);

enum class Readout { mean, sum, max };

std::string_view to_string(Readout r);
std::optional<Readout> parse_readout(std::string_view text);

/// Per-graph reduction of node rows. `graph_index` must be nondecreasing and
/// every graph in [0, num_graphs) must own at least one row.
Tensor readout(Tape& tape, const Tensor& h, std::span<const Index> graph_index, Index num_graphs, Readout mode);

}  // namespace gtagcn
