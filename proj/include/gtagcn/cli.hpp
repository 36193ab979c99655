#pragma once

#include "gtagcn/grad_check.hpp"
#include "gtagcn/graph.hpp"

#include <iosfwd>
#include <span>
#include <string>

namespace gtagcn::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kConfigError = 2,
    kDatasetError = 3,
    kNumericalError = 4,
};

/// Entry point behind the `gtagcn` binary; `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// The gradcheck command body, exposed so a suite with a deliberately broken
/// case can be run through it.
int run_gradcheck(std::span<const GradCase> cases, double tolerance, std::ostream& out, std::ostream& err);

/// Fills in missing split tags of a graph task: with no tags, a seeded 70:30
/// stratified train/test split; in every case, if no graph is tagged val,
/// 10% of each class's training graphs become validation graphs.
void assign_graph_split(GraphTask& task, std::uint64_t seed);

}  // namespace gtagcn::cli
