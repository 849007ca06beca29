#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bitgrid/geometry.hpp"
#include "bitgrid/image.hpp"
#include "bitgrid/topology.hpp"

namespace bitgrid {

// Reference distance transform: distance 0 for cells owning a boundary edge,
// a pending marker elsewhere, then d = 1 + min(neighbour d) relaxed to a
// fixed point. Converges in at most width*height rounds; the round count is
// reported through rounds_out when given.
DistanceField naive_distance_field(const BinaryImage& image, int* rounds_out = nullptr);

// Reference labeling: every one-cell starts with its own index and takes the
// minimum over 4-neighbours until stable, then labels are remapped to dense
// first-encounter row-major ids (the same convention as label_components).
ComponentLabeling naive_label_components(const BinaryImage& image);

// Brute-force minimiser of sum(sqrt(k_i)) over non-decreasing r-tuples with
// entries in [low, high] summing to total. Ties are detected exactly by
// rewriting each sum in the form sum(c_d * sqrt(d)) over square-free d;
// distinct forms are ordered by long double evaluation, which is far finer
// than the gaps arising for small parameters.
struct MinSumSqrtResult {
  double min_value = 0;
  std::vector<std::vector<long long>> witnesses;  // all attaining tuples, lexicographic
  // True iff at least one witness has at most one element different from
  // both low and high.
  bool extreme_witness_exists = false;
};

MinSumSqrtResult min_sum_sqrt(int r, long long low, long long high, long long total);

struct Violation {
  std::uint64_t image_code = 0;
  std::string check_id;
  std::string detail;
};

struct SweepReport {
  int grid_width = 0;
  int grid_height = 0;
  std::uint64_t images_checked = 0;
  std::vector<Violation> violations;  // sorted by (image_code, check_id, detail)
};

BinaryImage image_from_code(int width, int height, std::uint64_t code);

// Visits every width x height image once, in increasing code order when
// jobs == 1 and split into contiguous code ranges otherwise. The visitor
// must be a pure function of the image; results are aggregated canonically
// so the report does not depend on the partitioning. Requires
// width*height <= 25.
using SweepVisitor =
    std::function<void(std::uint64_t code, const BinaryImage& image, std::vector<Violation>& out)>;
SweepReport enumerate_images(int width, int height, const SweepVisitor& visitor, int jobs = 1);

// Runs the full per-image check battery over every image of the grid:
//   lemma2            boundary_length^2 >= 16 * area
//   lemma3            l_1 <= 3 * l_0
//   lemma4.<i>        (2i+1) * l_{i+1} <= (2i+3) * l_i   for i >= 1
//   lemma5.<i>        A_i <= (2i+1) * l_0
//   theorem4          max ball radius >= ceil(sqrt(area/l) - 1)
//   theorem5          hole-free: max ball radius >= floor(area/l)
//   ball-component    a cell at distance d lies in a component of size
//                     >= 2d^2 + 2d + 1
//   chain-strict      hole-free: A_i < A_{i-1} < ... < A_0 < l_0
//   t4-vs-t5          hole-free: theorem4 bound <= theorem5 bound + 1
//   dist-oracle       distance_field == naive_distance_field
//   label-oracle      label_components == naive_label_components
//   paths-cover       path lengths sum to the edge-set size
//   path-identity-*   corner bookkeeping per path (see BoundaryPath)
//   path-outside-minlen  outside paths of the i-boundary have length >= 8i+4
SweepReport exhaustive_verify(int width, int height, int jobs = 1);

}  // namespace bitgrid
