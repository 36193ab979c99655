#pragma once

#include "gtagcn/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace gtagcn {

struct Edge {
    Index src = 0;
    Index dst = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Square sparse matrix in canonical compressed-row form: column indices are
/// strictly increasing within each row and no explicit zeros are stored.
///
/// Immutable once built. The arrays live behind a shared pointer, so copies
/// are cheap and may be captured by backward rules.
template <typename Scalar>
class CsrMatrix {
public:
    struct Triplet {
        Index row;
        Index col;
        Scalar value;
    };

    CsrMatrix() : storage_(std::make_shared<const Storage>(Storage{{0}, {}, {}})) {}

    /// Builds from (row, col, value) entries. Duplicates are summed and
    /// resulting zeros dropped.
    static CsrMatrix from_triplets(Index n, std::vector<Triplet> entries);

    /// Builds from raw arrays, validating the canonical-form invariants.
    static CsrMatrix from_arrays(Index n, std::vector<Index> row_offsets, std::vector<Index> col_indices,
                                 std::vector<Scalar> values);

    static CsrMatrix identity(Index n);

    Index size() const { return n_; }
    Index nonzeros() const { return static_cast<Index>(storage_->values.size()); }

    std::span<const Index> row_offsets() const { return storage_->row_offsets; }
    std::span<const Index> col_indices() const { return storage_->col_indices; }
    std::span<const Scalar> values() const { return storage_->values; }

    Scalar coeff(Index row, Index col) const;
    CsrMatrix transpose() const;
    bool is_symmetric(Scalar tol = Scalar(0)) const;
    MatrixX<Scalar> to_dense() const;

    /// this * x for any dense expression with size() rows.
    template <typename Derived>
    MatrixX<Scalar> multiply(const Eigen::MatrixBase<Derived>& x) const;

    /// this^T * x without materializing the transpose.
    template <typename Derived>
    MatrixX<Scalar> transpose_multiply(const Eigen::MatrixBase<Derived>& x) const;

private:
    struct Storage {
        std::vector<Index> row_offsets;
        std::vector<Index> col_indices;
        std::vector<Scalar> values;
    };
    Index n_ = 0;
    std::shared_ptr<const Storage> storage_;

    CsrMatrix(Index n, std::shared_ptr<const Storage> s) : n_(n), storage_(std::move(s)) {}
};

using SparseMatrix = CsrMatrix<double>;

/// Binary adjacency from an edge list. Duplicates collapse to a single entry;
/// with `symmetrize` every (u, v) also stores (v, u). Self-loops are kept.
SparseMatrix csr_from_edges(Index n, std::span<const Edge> edges, bool symmetrize);

/// D^{-1/2} A D^{-1/2}, computed on A + I when `add_self_loops` is set.
/// Nodes of degree 0 get scaling 0, so their rows and columns are empty.
/// Throws DimensionError if A is not symmetric.
SparseMatrix normalized_adjacency(const SparseMatrix& adjacency, bool add_self_loops);

/// diag(blocks[0], blocks[1], ...).
SparseMatrix block_diagonal(std::span<const SparseMatrix* const> blocks);

/// Differentiable S * X. No gradient flows into the values of S.
Tensor spmm(Tape& tape, const SparseMatrix& s, const Tensor& x);

/// [X, S X, S^2 X, ..., S^K X] by repeated spmm.
std::vector<Tensor> power_apply(Tape& tape, const SparseMatrix& s, const Tensor& x, int k);

// ---------------------------------------------------------------------------

template <typename Scalar>
CsrMatrix<Scalar> CsrMatrix<Scalar>::identity(Index n) {
    auto s = std::make_shared<Storage>();
    s->row_offsets.resize(static_cast<std::size_t>(n) + 1);
    for (Index i = 0; i <= n; ++i) s->row_offsets[static_cast<std::size_t>(i)] = i;
    for (Index i = 0; i < n; ++i) {
        s->col_indices.push_back(i);
        s->values.push_back(Scalar(1));
    }
    return CsrMatrix(n, std::move(s));
}

template <typename Scalar>
CsrMatrix<Scalar> CsrMatrix<Scalar>::from_triplets(Index n, std::vector<Triplet> entries) {
    for (const auto& t : entries) {
        if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n) {
            throw DimensionError("csr: entry (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                                 ") outside a " + std::to_string(n) + "-node matrix");
        }
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    auto s = std::make_shared<Storage>();
    s->row_offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i;
        Scalar v(0);
        while (j < entries.size() && entries[j].row == entries[i].row && entries[j].col == entries[i].col) {
            v += entries[j].value;
            ++j;
        }
        if (v != Scalar(0)) {
            s->col_indices.push_back(entries[i].col);
            s->values.push_back(v);
            ++s->row_offsets[static_cast<std::size_t>(entries[i].row) + 1];
        }
        i = j;
    }
    for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) s->row_offsets[r + 1] += s->row_offsets[r];
    return CsrMatrix(n, std::move(s));
}

template <typename Scalar>
CsrMatrix<Scalar> CsrMatrix<Scalar>::from_arrays(Index n, std::vector<Index> row_offsets,
                                                 std::vector<Index> col_indices, std::vector<Scalar> values) {
    if (static_cast<Index>(row_offsets.size()) != n + 1 || row_offsets.front() != 0) {
        throw DimensionError("csr: row_offsets must have n+1 entries starting at 0");
    }
    if (col_indices.size() != values.size() || row_offsets.back() != static_cast<Index>(values.size())) {
        throw DimensionError("csr: last row offset must equal the number of stored entries");
    }
    for (Index r = 0; r < n; ++r) {
        const Index begin = row_offsets[static_cast<std::size_t>(r)];
        const Index end = row_offsets[static_cast<std::size_t>(r) + 1];
        if (end < begin) throw DimensionError("csr: row_offsets must be nondecreasing");
        for (Index p = begin; p < end; ++p) {
            const Index c = col_indices[static_cast<std::size_t>(p)];
            if (c < 0 || c >= n) throw DimensionError("csr: column index out of range");
            if (p > begin && c <= col_indices[static_cast<std::size_t>(p) - 1]) {
                throw DimensionError("csr: column indices must be strictly increasing within a row");
            }
            if (values[static_cast<std::size_t>(p)] == Scalar(0)) throw DimensionError("csr: explicit zero stored");
        }
    }
    auto s = std::make_shared<Storage>();
    s->row_offsets = std::move(row_offsets);
    s->col_indices = std::move(col_indices);
    s->values = std::move(values);
    return CsrMatrix(n, std::move(s));
}

template <typename Scalar>
Scalar CsrMatrix<Scalar>::coeff(Index row, Index col) const {
    const auto& s = *storage_;
    const auto begin = s.col_indices.begin() + s.row_offsets[static_cast<std::size_t>(row)];
    const auto end = s.col_indices.begin() + s.row_offsets[static_cast<std::size_t>(row) + 1];
    const auto it = std::lower_bound(begin, end, col);
    if (it == end || *it != col) return Scalar(0);
    return s.values[static_cast<std::size_t>(it - s.col_indices.begin())];
}

template <typename Scalar>
CsrMatrix<Scalar> CsrMatrix<Scalar>::transpose() const {
    const auto& src = *storage_;
    auto s = std::make_shared<Storage>();
    s->row_offsets.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (Index c : src.col_indices) ++s->row_offsets[static_cast<std::size_t>(c) + 1];
    for (std::size_t r = 0; r < static_cast<std::size_t>(n_); ++r) s->row_offsets[r + 1] += s->row_offsets[r];
    s->col_indices.resize(src.col_indices.size());
    s->values.resize(src.values.size());
    std::vector<Index> cursor(s->row_offsets.begin(), s->row_offsets.end() - 1);
    // Rows are visited in increasing order, so each transposed row comes out
    // sorted.
    for (Index r = 0; r < n_; ++r) {
        for (Index p = src.row_offsets[static_cast<std::size_t>(r)]; p < src.row_offsets[static_cast<std::size_t>(r) + 1];
             ++p) {
            const auto c = static_cast<std::size_t>(src.col_indices[static_cast<std::size_t>(p)]);
            const auto dst = static_cast<std::size_t>(cursor[c]++);
            s->col_indices[dst] = r;
            s->values[dst] = src.values[static_cast<std::size_t>(p)];
        }
    }
    return CsrMatrix(n_, std::move(s));
}

template <typename Scalar>
bool CsrMatrix<Scalar>::is_symmetric(Scalar tol) const {
    const CsrMatrix t = transpose();
    const auto& a = *storage_;
    const auto& b = *t.storage_;
    if (a.row_offsets != b.row_offsets || a.col_indices != b.col_indices) return false;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (std::abs(a.values[i] - b.values[i]) > tol) return false;
    }
    return true;
}

template <typename Scalar>
MatrixX<Scalar> CsrMatrix<Scalar>::to_dense() const {
    MatrixX<Scalar> d = MatrixX<Scalar>::Zero(n_, n_);
    const auto& s = *storage_;
    for (Index r = 0; r < n_; ++r) {
        for (Index p = s.row_offsets[static_cast<std::size_t>(r)]; p < s.row_offsets[static_cast<std::size_t>(r) + 1]; ++p) {
            d(r, s.col_indices[static_cast<std::size_t>(p)]) = s.values[static_cast<std::size_t>(p)];
        }
    }
    return d;
}

template <typename Scalar>
template <typename Derived>
MatrixX<Scalar> CsrMatrix<Scalar>::multiply(const Eigen::MatrixBase<Derived>& x) const {
    if (x.rows() != n_) {
        throw DimensionError("spmm: " + std::to_string(n_) + "-node operator applied to " + shape_string(x));
    }
    const auto& s = *storage_;
    MatrixX<Scalar> out = MatrixX<Scalar>::Zero(n_, x.cols());
    // Fixed per-row accumulation order keeps results independent of how rows
    // are batched.
    for (Index r = 0; r < n_; ++r) {
        for (Index p = s.row_offsets[static_cast<std::size_t>(r)]; p < s.row_offsets[static_cast<std::size_t>(r) + 1]; ++p) {
            out.row(r) += s.values[static_cast<std::size_t>(p)] * x.row(s.col_indices[static_cast<std::size_t>(p)]);
        }
    }
    return out;
}

template <typename Scalar>
template <typename Derived>
MatrixX<Scalar> CsrMatrix<Scalar>::transpose_multiply(const Eigen::MatrixBase<Derived>& x) const {
    if (x.rows() != n_) {
        throw DimensionError("spmm^T: " + std::to_string(n_) + "-node operator applied to " + shape_string(x));
    }
    const auto& s = *storage_;
    MatrixX<Scalar> out = MatrixX<Scalar>::Zero(n_, x.cols());
    for (Index r = 0; r < n_; ++r) {
        for (Index p = s.row_offsets[static_cast<std::size_t>(r)]; p < s.row_offsets[static_cast<std::size_t>(r) + 1]; ++p) {
            out.row(s.col_indices[static_cast<std::size_t>(p)]) += s.values[static_cast<std::size_t>(p)] * x.row(r);
        }
    }
    return out;
}

}  // namespace gtagcn
