#include "bitgrid/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace bitgrid {

namespace {
constexpr int kRow4[] = {-1, 0, 0, 1};
constexpr int kCol4[] = {0, -1, 1, 0};
constexpr int kRow8[] = {-1, -1, -1, 0, 0, 1, 1, 1};
constexpr int kCol8[] = {-1, 0, 1, -1, 1, -1, 0, 1};
}  // namespace

ComponentLabeling label_components(const BinaryImage& image) {
  const int w = image.width();
  const int h = image.height();
  ComponentLabeling out;
  out.width = w;
  out.height = h;
  out.labels.assign(static_cast<std::size_t>(w) * h, -1);

  std::vector<Cell> stack;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (!image.one(r, c) || out.labels[static_cast<std::size_t>(r) * w + c] != -1) continue;
      const std::int32_t id = static_cast<std::int32_t>(out.component_sizes.size());
      long long size = 0;
      stack.push_back({r, c});
      out.labels[static_cast<std::size_t>(r) * w + c] = id;
      while (!stack.empty()) {
        Cell cur = stack.back();
        stack.pop_back();
        ++size;
        for (int k = 0; k < 4; ++k) {
          int nr = cur.row + kRow4[k];
          int nc = cur.col + kCol4[k];
          if (!image.one(nr, nc)) continue;
          auto& lab = out.labels[static_cast<std::size_t>(nr) * w + nc];
          if (lab == -1) {
            lab = id;
            stack.push_back({nr, nc});
          }
        }
      }
      out.component_sizes.push_back(size);
    }
  }
  return out;
}

long long largest_component_size(const ComponentLabeling& labeling) {
  long long best = 0;
  for (long long s : labeling.component_sizes) best = std::max(best, s);
  return best;
}

HoleReport detect_holes(const BinaryImage& image, const ComponentLabeling& labeling) {
  const int w = image.width();
  const int h = image.height();
  HoleReport report;
  report.holes_per_component.assign(labeling.component_sizes.size(), 0);

  std::vector<char> seen(static_cast<std::size_t>(w) * h, 0);
  std::vector<Cell> stack;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (image.one(r, c) || seen[static_cast<std::size_t>(r) * w + c]) continue;
      // Flood the 8-connected zero region starting here.
      std::vector<Cell> region;
      bool touches_border = false;
      seen[static_cast<std::size_t>(r) * w + c] = 1;
      stack.push_back({r, c});
      while (!stack.empty()) {
        Cell cur = stack.back();
        stack.pop_back();
        region.push_back(cur);
        if (cur.row == 0 || cur.row == h - 1 || cur.col == 0 || cur.col == w - 1) {
          touches_border = true;
        }
        for (int k = 0; k < 8; ++k) {
          int nr = cur.row + kRow8[k];
          int nc = cur.col + kCol8[k];
          if (nr < 0 || nr >= h || nc < 0 || nc >= w) continue;
          if (image.one(nr, nc)) continue;
          auto& fl = seen[static_cast<std::size_t>(nr) * w + nc];
          if (!fl) {
            fl = 1;
            stack.push_back({nr, nc});
          }
        }
      }
      if (touches_border) continue;

      HoleRegion hole;
      std::sort(region.begin(), region.end());
      hole.cells = std::move(region);
      // The cell directly above the topmost-leftmost hole cell is always a
      // one-cell of the surrounding component: a zero there would belong to
      // the same region and sort first, and row 0 would make the region
      // exterior. Other one-cells touching the hole may be islands enclosed
      // by it; they are inside the hole, not enclosing it.
      const Cell first = hole.cells.front();
      if (first.row == 0 || !image.one(first.row - 1, first.col)) {
        throw std::logic_error("hole without an enclosing one-cell above it");
      }
      hole.enclosing_component = labeling.label_at(first.row - 1, first.col);
      report.holes_per_component[hole.enclosing_component] += 1;
      report.hole_regions.push_back(std::move(hole));
    }
  }
  report.hole_free = report.hole_regions.empty();
  return report;
}

}  // namespace bitgrid
