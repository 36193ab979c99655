#pragma once

#include "gtagcn/tensor.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace gtagcn {

struct AdamState {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    std::uint64_t step = 0;
    std::vector<Matrix> first_moment;
    std::vector<Matrix> second_moment;
};

/// Allocates zeroed moments shaped like `params`.
AdamState make_adam_state(std::span<const Tensor> params);

/// One bias-corrected Adam update, in place. Parameters that received no
/// gradient are treated as having a zero gradient.
void adam_step(std::span<Tensor> params, AdamState& state, double lr);

}  // namespace gtagcn
