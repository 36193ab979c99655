#pragma once

#include "gtagcn/graph.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace gtagcn {

using Points = Eigen::Matrix<double, Eigen::Dynamic, 2, Eigen::RowMajor>;

/// Ordered pen trajectory. Consecutive duplicate points are dropped on
/// construction; fewer than two distinct points is a DatasetError.
class Stroke {
public:
    explicit Stroke(const Points& points);

    const Points& points() const { return points_; }
    Index size() const { return points_.rows(); }
    double length() const;

private:
    Points points_;
};

struct IngestConfig {
    Index length = 25;      // L, nodes per graph
    int direction_bins = 8;

    void validate() const;
};

/// L points equally spaced by arc length; endpoints are copied exactly.
Stroke resample_stroke(const Stroke& stroke, Index length);

/// Freeman direction of every segment: sector 0 is centered on +x and sectors
/// advance counterclockwise. An angle on a sector boundary takes the lower
/// index (the boundary between the last sector and sector 0 maps to 0).
std::vector<int> chain_code(const Stroke& stroke, int bins);
int direction_code(double dx, double dy, int bins);

/// Path graph with L nodes and edges (i, i+1). Node i's feature row holds
/// code_i / bins on the diagonal (the last node repeats the final segment's
/// code) and 0.1 * exp(-|i - j| / L) elsewhere.
Graph stroke_to_graph(const Stroke& stroke, const IngestConfig& config);

/// Outer boundary of the largest 8-connected foreground component
/// (pixel >= threshold), traced clockwise with the Moore neighborhood from its
/// topmost-leftmost pixel. Points are (column, rows - 1 - row).
template <typename Derived>
Stroke image_to_stroke(const Eigen::MatrixBase<Derived>& image, typename Derived::Scalar threshold);

using ByteImage = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct IdxItem {
    ByteImage image;
    int label = 0;
};

/// Reads an IDX image file (magic 0x00000803) and label file (0x00000801).
std::vector<IdxItem> load_idx(const std::filesystem::path& images, const std::filesystem::path& labels);

/// Writes the same layout; used for fixtures.
void save_idx(const std::filesystem::path& images, const std::filesystem::path& labels, std::span<const IdxItem> items);

/// Seeded parametric curve families (line, circle, zigzag, loop, S-curve,
/// ...), one class per family, with Gaussian jitter of the raw control points.
/// Classes beyond the base families reuse them rotated.
GraphTask make_synthetic_strokes(int classes, int per_class, std::uint64_t seed, double jitter = 0.05,
                                 const IngestConfig& config = {});

inline constexpr int kSyntheticFamilies = 12;

// ---------------------------------------------------------------------------

namespace detail {
std::vector<std::pair<Index, Index>> trace_boundary(const std::vector<std::uint8_t>& mask, Index rows, Index cols);
}

template <typename Derived>
Stroke image_to_stroke(const Eigen::MatrixBase<Derived>& image, typename Derived::Scalar threshold) {
    const Index rows = image.rows();
    const Index cols = image.cols();
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(rows * cols));
    for (Index r = 0; r < rows; ++r) {
        for (Index c = 0; c < cols; ++c) mask[static_cast<std::size_t>(r * cols + c)] = image(r, c) >= threshold ? 1 : 0;
    }
    const auto boundary = detail::trace_boundary(mask, rows, cols);
    Points pts(static_cast<Index>(boundary.size()), 2);
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        pts(static_cast<Index>(i), 0) = static_cast<double>(boundary[i].second);
        pts(static_cast<Index>(i), 1) = static_cast<double>(rows - 1 - boundary[i].first);
    }
    return Stroke(pts);
}

}  // namespace gtagcn
