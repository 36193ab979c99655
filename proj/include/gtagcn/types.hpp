#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace gtagcn {

using Index = Eigen::Index;

// Dense storage is row-major throughout: node-feature matrices are read and
// written one node (row) at a time.
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using RowVectorX = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using Matrix = MatrixX<double>;
using RowVector = RowVectorX<double>;

// The one pseudo-random generator used everywhere. It is always passed
// explicitly; nothing in the library touches global random state.
using Rng = std::mt19937_64;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DatasetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A forward value became NaN/Inf, or an algorithm hit an undefined point.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AutodiffError : std::logic_error {
    using std::logic_error::logic_error;
};

std::string shape_string(Index rows, Index cols);

template <typename Derived>
std::string shape_string(const Eigen::EigenBase<Derived>& m) {
    return shape_string(m.rows(), m.cols());
}

}  // namespace gtagcn
