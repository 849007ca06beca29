#include "bitgrid/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace bitgrid {

namespace {

constexpr int kRow4[] = {-1, 0, 0, 1};
constexpr int kCol4[] = {0, -1, 1, 0};

struct Vertex {
  int row = 0;
  int col = 0;
  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

// An edge oriented so that its high-side cell is on the traversal's left.
struct DirectedEdge {
  EdgeId id;
  Vertex from;
  Vertex to;
  Cell left;    // high-side flank
  Cell right;   // low-side flank
};

DirectedEdge orient_edge(const EdgeId& e, const CellPredicate& high_side) {
  if (e.orientation == EdgeOrientation::vertical) {
    Cell west{e.row, e.col - 1};
    Cell east{e.row, e.col};
    bool hw = high_side(west.row, west.col);
    bool he = high_side(east.row, east.col);
    if (hw == he) throw std::logic_error("edge does not separate the two sides");
    if (he) {
      // Southbound: east flank on the left.
      return {e, {e.row, e.col}, {e.row + 1, e.col}, east, west};
    }
    // Northbound: west flank on the left.
    return {e, {e.row + 1, e.col}, {e.row, e.col}, west, east};
  }
  Cell north{e.row - 1, e.col};
  Cell south{e.row, e.col};
  bool hn = high_side(north.row, north.col);
  bool hs = high_side(south.row, south.col);
  if (hn == hs) throw std::logic_error("edge does not separate the two sides");
  if (hn) {
    // Eastbound: north flank on the left.
    return {e, {e.row, e.col}, {e.row, e.col + 1}, north, south};
  }
  // Westbound: south flank on the left.
  return {e, {e.row, e.col + 1}, {e.row, e.col}, south, north};
}

bool same_direction(const DirectedEdge& a, const DirectedEdge& b) {
  return (a.to.row - a.from.row) == (b.to.row - b.from.row) &&
         (a.to.col - a.from.col) == (b.to.col - b.from.col);
}

// The unique cell bounded by both edges of a corner.
Cell corner_cell(const DirectedEdge& a, const DirectedEdge& b) {
  for (const Cell& x : {a.left, a.right}) {
    if (x == b.left || x == b.right) return x;
  }
  throw std::logic_error("corner edges do not share a cell");
}

CornerStats tally_corners(const std::vector<DirectedEdge>& cycle, const CellPredicate& high_side) {
  CornerStats stats;
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) {
    const DirectedEdge& cur = cycle[i];
    const DirectedEdge& next = cycle[(i + 1) % n];
    if (same_direction(cur, next)) {
      ++stats.straight;
    } else {
      Cell corner = corner_cell(cur, next);
      if (high_side(corner.row, corner.col)) {
        ++stats.salient;
      } else {
        ++stats.reentrant;
      }
    }
  }
  return stats;
}

// Even/odd test: the high-side cell next to the path's first edge is inside
// the closed curve iff a ray cast upward from its centre crosses the path an
// odd number of times. The ray at column c + 0.5 crosses exactly the
// horizontal path edges in column c at rows <= r.
PathSide side_of_high_cells(const std::vector<DirectedEdge>& cycle) {
  const Cell probe = cycle.front().left;
  long long crossings = 0;
  for (const DirectedEdge& e : cycle) {
    if (e.id.orientation == EdgeOrientation::horizontal && e.id.col == probe.col &&
        e.id.row <= probe.row) {
      ++crossings;
    }
  }
  return (crossings % 2 == 1) ? PathSide::inside : PathSide::outside;
}

}  // namespace

int DistanceField::max_distance() const {
  int best = -1;
  for (int d : distance) best = std::max(best, d);
  return best;
}

std::vector<EdgeId> boundary_edges(const BinaryImage& image) {
  std::vector<EdgeId> edges;
  for (int r = 0; r < image.height(); ++r) {
    for (int c = 0; c < image.width(); ++c) {
      if (!image.one(r, c)) continue;
      if (!image.one(r - 1, c)) edges.push_back({EdgeOrientation::horizontal, r, c});
      if (!image.one(r + 1, c)) edges.push_back({EdgeOrientation::horizontal, r + 1, c});
      if (!image.one(r, c - 1)) edges.push_back({EdgeOrientation::vertical, r, c});
      if (!image.one(r, c + 1)) edges.push_back({EdgeOrientation::vertical, r, c + 1});
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

long long boundary_length(const BinaryImage& image) {
  return static_cast<long long>(boundary_edges(image).size());
}

DistanceField distance_field(const BinaryImage& image) {
  const int w = image.width();
  const int h = image.height();
  DistanceField field;
  field.width = w;
  field.height = h;
  field.distance.assign(static_cast<std::size_t>(w) * h, -1);

  // Multi-source BFS from the cells owning a boundary edge; every one-cell
  // reaches one of them through its component.
  std::vector<Cell> frontier;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (!image.one(r, c)) continue;
      bool owns_boundary_edge = !image.one(r - 1, c) || !image.one(r + 1, c) ||
                                !image.one(r, c - 1) || !image.one(r, c + 1);
      if (owns_boundary_edge) {
        field.distance[static_cast<std::size_t>(r) * w + c] = 0;
        frontier.push_back({r, c});
      } else {
        field.distance[static_cast<std::size_t>(r) * w + c] = -2;  // pending
      }
    }
  }
  std::vector<Cell> next;
  int level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (const Cell& cell : frontier) {
      for (int k = 0; k < 4; ++k) {
        int nr = cell.row + kRow4[k];
        int nc = cell.col + kCol4[k];
        if (nr < 0 || nr >= h || nc < 0 || nc >= w) continue;
        auto& d = field.distance[static_cast<std::size_t>(nr) * w + nc];
        if (d == -2) {
          d = level;
          next.push_back({nr, nc});
        }
      }
    }
    frontier.swap(next);
  }
  return field;
}

std::vector<EdgeId> iboundary_edges(const BinaryImage& image, const DistanceField& field, int i) {
  if (i < 1) throw std::invalid_argument("iboundary index must be >= 1");
  (void)image;
  std::vector<EdgeId> edges;
  for (int r = 0; r < field.height; ++r) {
    for (int c = 0; c < field.width; ++c) {
      if (field.at(r, c) != i) continue;
      if (field.at(r - 1, c) == i - 1) edges.push_back({EdgeOrientation::horizontal, r, c});
      if (field.at(r + 1, c) == i - 1) edges.push_back({EdgeOrientation::horizontal, r + 1, c});
      if (field.at(r, c - 1) == i - 1) edges.push_back({EdgeOrientation::vertical, r, c});
      if (field.at(r, c + 1) == i - 1) edges.push_back({EdgeOrientation::vertical, r, c + 1});
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<long long> level_counts(const DistanceField& field) {
  std::vector<long long> counts(static_cast<std::size_t>(field.max_distance() + 1), 0);
  for (int d : field.distance) {
    if (d >= 0) ++counts[static_cast<std::size_t>(d)];
  }
  return counts;
}

std::optional<int> max_ball_radius(const DistanceField& field) {
  int d = field.max_distance();
  if (d < 0) return std::nullopt;
  return d;
}

long long ball_cell_count(long long k) {
  if (k < 0) throw std::invalid_argument("ball radius must be >= 0");
  return 2 * k * k + 2 * k + 1;
}

BoundaryPathSet decompose_paths(const std::vector<EdgeId>& edges, const CellPredicate& high_side) {
  std::vector<EdgeId> sorted = edges;
  std::sort(sorted.begin(), sorted.end());

  std::vector<DirectedEdge> directed;
  directed.reserve(sorted.size());
  for (const EdgeId& e : sorted) directed.push_back(orient_edge(e, high_side));

  // Group incident edges by vertex to build the successor map.
  std::map<Vertex, std::pair<std::vector<int>, std::vector<int>>> incidence;  // (in, out)
  for (int i = 0; i < static_cast<int>(directed.size()); ++i) {
    incidence[directed[i].to].first.push_back(i);
    incidence[directed[i].from].second.push_back(i);
  }

  std::vector<int> successor(directed.size(), -1);
  for (const auto& [vertex, inout] : incidence) {
    const auto& [in, out] = inout;
    (void)vertex;
    if (in.size() != out.size() || in.size() < 1 || in.size() > 2) {
      throw std::logic_error("malformed edge set: odd vertex degree");
    }
    if (in.size() == 1) {
      successor[in[0]] = out[0];
      continue;
    }
    // Degree-4 vertex: two high-side cells touch diagonally. Keep the same
    // high-side cell on the left through the turn.
    for (int i_in : in) {
      int match = -1;
      for (int i_out : out) {
        if (directed[i_out].left == directed[i_in].left) {
          if (match != -1) throw std::logic_error("ambiguous pairing at degree-4 vertex");
          match = i_out;
        }
      }
      if (match == -1) throw std::logic_error("no continuation at degree-4 vertex");
      successor[i_in] = match;
    }
  }

  BoundaryPathSet result;
  std::vector<char> visited(directed.size(), 0);
  for (int start = 0; start < static_cast<int>(directed.size()); ++start) {
    if (visited[start]) continue;
    std::vector<DirectedEdge> cycle;
    int cur = start;
    do {
      visited[cur] = 1;
      cycle.push_back(directed[cur]);
      cur = successor[cur];
    } while (cur != start);

    BoundaryPath path;
    path.edges.reserve(cycle.size());
    for (const DirectedEdge& e : cycle) path.edges.push_back(e.id);
    CornerStats stats = tally_corners(cycle, high_side);
    path.straight_count = stats.straight;
    path.reentrant_count = stats.reentrant;
    path.salient_count = stats.salient;
    path.ones_side = side_of_high_cells(cycle);
    result.paths.push_back(std::move(path));
  }
  return result;
}

BoundaryPathSet decompose_boundary_paths(const BinaryImage& image) {
  return decompose_paths(boundary_edges(image),
                         [&image](int r, int c) { return image.one(r, c); });
}

BoundaryPathSet decompose_iboundary_paths(const BinaryImage& image, const DistanceField& field,
                                          int i) {
  return decompose_paths(iboundary_edges(image, field, i),
                         [&field, i](int r, int c) { return field.at(r, c) == i; });
}

CornerStats classify_corners(const std::vector<EdgeId>& path, const CellPredicate& high_side) {
  std::vector<DirectedEdge> cycle;
  cycle.reserve(path.size());
  for (const EdgeId& e : path) cycle.push_back(orient_edge(e, high_side));
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i].to != cycle[(i + 1) % cycle.size()].from) {
      throw std::logic_error("edges do not form a closed directed path");
    }
  }
  return tally_corners(cycle, high_side);
}

}  // namespace bitgrid
