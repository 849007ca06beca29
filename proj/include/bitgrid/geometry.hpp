#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bitgrid/image.hpp"

namespace bitgrid {

// City-block distance to the boundary, defined on one-cells only:
// d = 0 for a cell owning at least one boundary edge, otherwise
// 1 + min over the 4-neighbours. Zero cells carry -1.
struct DistanceField {
  int width = 0;
  int height = 0;
  std::vector<int> distance;

  int at(int row, int col) const {
    if (row < 0 || row >= height || col < 0 || col >= width) return -1;
    return distance[static_cast<std::size_t>(row) * width + col];
  }
  // -1 for an image with no ones.
  int max_distance() const;
};

// Edges separating a one-cell from a zero cell (the exterior counts as
// zero). Sorted canonically.
std::vector<EdgeId> boundary_edges(const BinaryImage& image);
long long boundary_length(const BinaryImage& image);

DistanceField distance_field(const BinaryImage& image);

// Edges separating a cell at distance i-1 from a cell at distance i
// (both ones). Requires i >= 1.
std::vector<EdgeId> iboundary_edges(const BinaryImage& image, const DistanceField& field, int i);

// level_counts(field)[i] = number of one-cells at distance i; empty for an
// empty image.
std::vector<long long> level_counts(const DistanceField& field);

// Largest k such that some cell has distance >= k; nullopt when the image
// has no ones (note: not 0).
std::optional<int> max_ball_radius(const DistanceField& field);

// Cells of a city-block ball of radius k: 2k^2 + 2k + 1. Requires k >= 0.
long long ball_cell_count(long long k);

// Classifies the cell (row, col) as lying on the high side of an edge set:
// ones for the boundary, distance-i cells for the i-boundary. Every edge in
// a decomposable set must have the high side on exactly one flank.
using CellPredicate = std::function<bool(int row, int col)>;

enum class PathSide { inside, outside };

// One closed path of a decomposition, edges in traversal order. The
// traversal keeps high-side cells on its left. Corner bookkeeping for
// consecutive edge pairs along the path:
//   straight  - collinear continuation,
//   reentrant - both edges bound the same low-side cell,
//   salient   - both edges bound the same high-side cell.
struct BoundaryPath {
  std::vector<EdgeId> edges;
  PathSide ones_side = PathSide::inside;  // side on which the high-side cells lie
  long long straight_count = 0;
  long long reentrant_count = 0;
  long long salient_count = 0;

  long long length() const { return static_cast<long long>(edges.size()); }
};

struct BoundaryPathSet {
  std::vector<BoundaryPath> paths;
};

struct CornerStats {
  long long straight = 0;
  long long reentrant = 0;
  long long salient = 0;
};

// Splits an edge set into closed paths. Every lattice vertex meets an even
// number of edges; at a degree-4 vertex (two high-side cells touching
// diagonally) each incoming edge pairs with the outgoing edge that keeps the
// same high-side cell on the traversal's left, so the two diagonal cells get
// separate corners and a lone diagonal pair splits into two unit squares.
// Paths are pairwise edge-disjoint, closed, and never cross themselves; a
// path may touch itself at a degree-4 vertex. Throws std::logic_error for a
// malformed edge set (odd vertex degree, or an edge with both flanks on the
// same side).
BoundaryPathSet decompose_paths(const std::vector<EdgeId>& edges, const CellPredicate& high_side);

BoundaryPathSet decompose_boundary_paths(const BinaryImage& image);
BoundaryPathSet decompose_iboundary_paths(const BinaryImage& image, const DistanceField& field,
                                          int i);

// Recomputes corner statistics for a closed path given in traversal order.
CornerStats classify_corners(const std::vector<EdgeId>& path, const CellPredicate& high_side);

}  // namespace bitgrid
