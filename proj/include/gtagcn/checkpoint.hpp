#pragma once

#include "gtagcn/train.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace gtagcn {

inline constexpr const char* kToolkitVersion = "0.1.0";

/// Provenance stamped into every file the toolkit writes.
struct RunManifest {
    std::vector<std::string> command;
    std::string dataset;
    std::string dataset_fingerprint;
    std::uint64_t seed = 0;
    std::string version = kToolkitVersion;
};

/// Pretty-printed JSON: manifest, resolved configs, per-epoch arrays, summary.
/// `wall_time_s` is the only field that varies between identical runs.
std::string report_to_json(const TrainReport& report, const ModelConfig& model_config,
                           const TrainConfig& train_config, const RunManifest& manifest);

std::string cross_validation_to_json(const CrossValidationReport& report, const ModelConfig& model_config,
                                     const TrainConfig& train_config, const RunManifest& manifest);

struct Checkpoint {
    ModelConfig config;
    Index input_dim = 0;
    int num_classes = 0;
    ModelSnapshot snapshot;
    std::map<std::string, double> accuracies;  // split name -> accuracy at save time
    RunManifest manifest;

    Model instantiate() const;
};

void save_checkpoint(const std::filesystem::path& file, Model& model, const std::map<std::string, double>& accuracies,
                     const RunManifest& manifest);
/// Throws DatasetError on a missing or malformed file.
Checkpoint load_checkpoint(const std::filesystem::path& file);

}  // namespace gtagcn
