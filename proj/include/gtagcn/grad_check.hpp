#pragma once

#include "gtagcn/tensor.hpp"

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace gtagcn {

/// Builds a scalar (1x1) tensor from the given leaves.
using ScalarFunction = std::function<Tensor(Tape&, std::span<const Tensor>)>;

struct GradCheckReport {
    double max_rel_error = 0.0;
    std::size_t worst_input = 0;
    Index worst_row = 0;
    Index worst_col = 0;
    double worst_analytic = 0.0;
    double worst_numeric = 0.0;
    std::size_t entries_checked = 0;
};

/// Relative error used by grad_check. The denominator is floored at 1e-3 so
/// entries whose true derivative is ~0 are judged on absolute error.
double grad_rel_error(double analytic, double numeric);

/// Compares tape gradients of `f` at `inputs` with central differences of
/// step `h`. Every input is treated as a requires_grad leaf.
GradCheckReport grad_check(const ScalarFunction& f, std::span<const Matrix> inputs, double h = 1e-6);

struct GradCase {
    std::string name;
    ScalarFunction f;
    std::vector<Matrix> inputs;
};

struct GradSuiteResult {
    std::string name;
    GradCheckReport report;
    bool passed = false;
};

/// Runs every case, printing one table row per case to `out`.
std::vector<GradSuiteResult> run_grad_check_suite(std::span<const GradCase> cases, double tol, std::ostream& out);

/// Cases covering every differentiable op and layer of the toolkit, including
/// a GTAGCN layer with K = 6.
std::vector<GradCase> default_grad_check_cases();

}  // namespace gtagcn
