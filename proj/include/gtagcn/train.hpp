#pragma once

#include "gtagcn/model.hpp"

#include <functional>
#include <iosfwd>
#include <vector>

namespace gtagcn {

struct TrainConfig {
    double lr = 0.01;
    int max_epochs = 1000;
    int patience = 100;
    Index batch_size = 64;
    int folds = 10;
    int threads = 1;  // cross_validate only

    void validate() const;
};

struct TrainReport {
    std::vector<double> train_loss;
    std::vector<double> val_acc;
    std::vector<double> val_loss;
    int epochs_run = 0;
    int best_epoch = 0;  // 1-based
    double best_val_acc = 0.0;
    double best_val_loss = 0.0;
    double train_acc = 0.0;
    double test_acc = 0.0;  // NaN-free; 0 when the test split is empty
    bool has_test = false;
    double wall_time_s = 0.0;
    std::uint64_t seed = 0;
};

struct EvalResult {
    double accuracy = 0.0;
    double loss = 0.0;
    Index correct = 0;
    Index total = 0;
    std::vector<Index> class_correct;
    std::vector<Index> class_total;
};

/// Called after every epoch; return false to stop early.
using EpochCallback = std::function<bool(int epoch, double train_loss, double val_acc, double val_loss)>;

TrainReport train(Model& model, const NodeTask& task, const TrainConfig& config, const EpochCallback& on_epoch = {});
/// Uses task.split; graphs tagged val drive early stopping.
TrainReport train(Model& model, const GraphTask& task, const TrainConfig& config, const EpochCallback& on_epoch = {});

EvalResult evaluate(Model& model, const NodeTask& task, Split split);
EvalResult evaluate(Model& model, const GraphTask& task, Split split);
/// Graph-level evaluation over an explicit index set.
EvalResult evaluate(Model& model, const GraphTask& task, std::span<const Index> graphs);

/// Predicted class per node (eval mode).
std::vector<int> predict(Model& model, const NodeTask& task);

/// Scores argmax predictions of `log_probs` rows against `labels`.
EvalResult score(const Matrix& log_probs, std::span<const int> labels, int num_classes, double loss);

/// Seeded fold id per item. Falls back to a plain shuffled assignment
/// (stratified = false) when some present class has fewer than `folds` items.
std::vector<int> assign_folds(std::span<const int> labels, int num_classes, int folds, std::uint64_t seed,
                              bool& stratified);

struct CrossValidationReport {
    std::vector<double> fold_accuracy;
    std::vector<TrainReport> fold_reports;
    double mean = 0.0;
    double std = 0.0;  // sample standard deviation
    bool stratified = true;
};

/// Per fold f: test = fold f, validation = a seeded stratified 10% of the
/// remaining graphs, train = the rest.
CrossValidationReport cross_validate(const GraphTask& task, const ModelConfig& model_config,
                                     const TrainConfig& train_config, std::ostream* warnings = nullptr);

inline constexpr double kGraphValFraction = 0.1;
inline constexpr double kGraphTrainFraction = 0.7;

}  // namespace gtagcn
