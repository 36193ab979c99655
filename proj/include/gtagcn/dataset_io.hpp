#pragma once

#include "gtagcn/graph.hpp"

#include <filesystem>
#include <string>

namespace gtagcn {

// Portable plain-text dataset formats.
//
// Node dataset directory:
//   meta.json     {"num_nodes":N,"num_features":d,"num_classes":C,"task":"node"}
//   edges.tsv     one "u<TAB>v" per line, 0-indexed, directed as stored
//   features.csv  N lines of d comma-separated decimals
//   labels.csv    N lines, one integer each
//   splits.csv    N lines, each train|val|test|none
//
// Graph dataset file (*.graphs.jsonl), one record per line:
//   {"n":25,"edges":[[0,1],...],"x":[[...],...],"y":3}
// An optional "split" member (train|val|test) pins the record's split.
//
// All files are UTF-8 with LF line endings. Parse failures throw DatasetError
// naming the file and line (or record) number.

NodeTask load_node_dataset(const std::filesystem::path& dir);
void save_node_dataset(const std::filesystem::path& dir, const NodeTask& task);

/// `num_classes` is max label + 1 unless `min_classes` is larger.
GraphTask load_graph_dataset(const std::filesystem::path& file, int min_classes = 0);
void save_graph_dataset(const std::filesystem::path& file, const GraphTask& task);

bool is_graph_dataset_path(const std::filesystem::path& path);

/// 64-bit FNV-1a over the dataset's file contents (every regular file of a
/// directory in name order, or the single file), as 16 hex digits.
std::string dataset_fingerprint(const std::filesystem::path& path);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace gtagcn
