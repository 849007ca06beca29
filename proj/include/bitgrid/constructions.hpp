#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bitgrid/image.hpp"

namespace bitgrid {

enum class ConstructionKind {
  square,
  theorem1_extremal,
  theorem2_extremal,
  hole_lattice,
  rectangle,
  ball,
};

// Canonical CLI-facing name, e.g. "theorem1-extremal".
std::string construction_kind_name(ConstructionKind kind);

// Closed-form predictions for a construction, never measured from the image.
// Golden tests compare these against compute_metrics of the built image.
struct ExpectedMetrics {
  int width = 0;
  int height = 0;
  long long area = 0;
  long long boundary_length = 0;
  int component_count = 0;
  std::vector<long long> component_sizes;  // descending
  long long largest_component = 0;
  int hole_count = 0;
  bool hole_free = true;
  std::optional<int> max_ball_radius;
};

struct Construction {
  ConstructionKind kind;
  std::vector<std::pair<std::string, long long>> parameters;  // declaration order
  BinaryImage image;
  ExpectedMetrics expected;
};

// m x m block of ones. Requires m >= 1.
BinaryImage square_image(long long m);

// Two components on one canvas, separated by a one-column gap: an
// (m-c) x (m+c) rectangle and a c x c square. Area m^2, boundary 4m+4c,
// largest component m^2-c^2. Requires m > c >= 1.
BinaryImage theorem1_extremal(long long m, long long c);

// c x c grid of (m/c) x (m/c) squares of ones with one-cell gaps. Area m^2,
// boundary 4mc, all components of size (m/c)^2. Requires c | m, m >= c >= 1.
BinaryImage theorem2_extremal(long long m, long long c);

// Square of side cu^2 + u - 1 with single-cell holes at every cell whose
// 1-based coordinates are both divisible by u. Requires u >= 2, c >= 1
// (u = 1 would zero out everything).
BinaryImage hole_lattice(long long u, long long c);

// a x (t*a) block of ones. Requires a >= 1, t >= 1.
BinaryImage rectangle_image(long long a, long long t);

// Diamond of radius k centered on a (2k+1) x (2k+1) canvas: ones where
// |r-k| + |c-k| <= k, which is 2k^2 + 2k + 1 cells. Requires k >= 0.
BinaryImage ball_image(long long k);

Construction build_square(long long m);
Construction build_theorem1_extremal(long long m, long long c);
Construction build_theorem2_extremal(long long m, long long c);
Construction build_hole_lattice(long long u, long long c);
Construction build_rectangle(long long a, long long t);
Construction build_ball(long long k);

}  // namespace bitgrid
