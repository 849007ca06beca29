#pragma once

#include <cstdint>
#include <vector>

#include "bitgrid/image.hpp"

namespace bitgrid {

// Connected components of the one-cells under 4-adjacency. Component ids are
// dense, starting at 0, assigned in first-encounter row-major order; zero
// cells carry label -1.
struct ComponentLabeling {
  int width = 0;
  int height = 0;
  std::vector<std::int32_t> labels;
  std::vector<long long> component_sizes;

  int component_count() const { return static_cast<int>(component_sizes.size()); }
  std::int32_t label_at(int row, int col) const {
    return labels[static_cast<std::size_t>(row) * width + col];
  }
};

ComponentLabeling label_components(const BinaryImage& image);

// 0 for an empty image.
long long largest_component_size(const ComponentLabeling& labeling);

// A hole is a maximal 8-connected region of zero cells that does not touch
// the rectangle border (border-touching regions are part of the exterior).
struct HoleRegion {
  std::vector<Cell> cells;       // sorted row-major
  int enclosing_component = -1;  // component surrounding the hole from outside
};

struct HoleReport {
  std::vector<HoleRegion> hole_regions;          // ordered by first cell, row-major
  std::vector<long long> holes_per_component;    // indexed by component id
  bool hole_free = true;
};

// The enclosing component is read off the one-cell directly above the hole's
// topmost-leftmost cell, which always belongs to the surrounding component.
// One-cell islands completely inside a hole touch it too but do not enclose
// it and are not credited with it.
HoleReport detect_holes(const BinaryImage& image, const ComponentLabeling& labeling);

}  // namespace bitgrid
