#include "bitgrid/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace bitgrid {

namespace {

constexpr int kRow4[4] = {-1, 1, 0, 0};
constexpr int kCol4[4] = {0, 0, -1, 1};

}  // namespace

DistanceField naive_distance_field(const BinaryImage& image, int* rounds_out) {
  const int w = image.width();
  const int h = image.height();
  const int unknown = w * h + 1;  // larger than any attainable distance
  DistanceField field;
  field.width = w;
  field.height = h;
  field.distance.assign(static_cast<std::size_t>(w) * h, -1);

  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (!image.one(r, c)) continue;
      bool owns_edge = false;
      for (int k = 0; k < 4 && !owns_edge; ++k) {
        owns_edge = image.value(r + kRow4[k], c + kCol4[k]) == 0;
      }
      field.distance[static_cast<std::size_t>(r) * w + c] = owns_edge ? 0 : unknown;
    }
  }

  // Relax d = 1 + min(neighbour d) until nothing moves. Every sweep that
  // changes anything lowers at least one cell, so the loop is bounded by the
  // number of one-cells.
  int rounds = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) {
        std::size_t idx = static_cast<std::size_t>(r) * w + c;
        if (field.distance[idx] <= 0) continue;
        int best = unknown;
        for (int k = 0; k < 4; ++k) {
          int nr = r + kRow4[k];
          int nc = c + kCol4[k];
          if (nr < 0 || nr >= h || nc < 0 || nc >= w) continue;
          int nd = field.distance[static_cast<std::size_t>(nr) * w + nc];
          if (nd >= 0) best = std::min(best, nd);
        }
        int relaxed = best >= unknown ? unknown : best + 1;
        if (relaxed < field.distance[idx]) {
          field.distance[idx] = relaxed;
          changed = true;
        }
      }
    }
    if (changed) ++rounds;
  }
  if (rounds_out != nullptr) *rounds_out = rounds;
  return field;
}

ComponentLabeling naive_label_components(const BinaryImage& image) {
  const int w = image.width();
  const int h = image.height();
  std::vector<std::int32_t> label(static_cast<std::size_t>(w) * h, -1);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (image.one(r, c)) label[static_cast<std::size_t>(r) * w + c] = r * w + c;
    }
  }

  // Min-label propagation: every one-cell takes the minimum over itself and
  // its 4-neighbours until stable, so each component ends up tagged with its
  // smallest row-major index.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) {
        std::size_t idx = static_cast<std::size_t>(r) * w + c;
        if (label[idx] < 0) continue;
        for (int k = 0; k < 4; ++k) {
          int nr = r + kRow4[k];
          int nc = c + kCol4[k];
          if (nr < 0 || nr >= h || nc < 0 || nc >= w) continue;
          std::int32_t nl = label[static_cast<std::size_t>(nr) * w + nc];
          if (nl >= 0 && nl < label[idx]) {
            label[idx] = nl;
            changed = true;
          }
        }
      }
    }
  }

  // The smallest index of a component is also its first row-major cell, so
  // remapping tags in first-encounter order reproduces label_components ids.
  ComponentLabeling out;
  out.width = w;
  out.height = h;
  out.labels.assign(static_cast<std::size_t>(w) * h, -1);
  std::map<std::int32_t, std::int32_t> dense;
  for (std::size_t idx = 0; idx < label.size(); ++idx) {
    if (label[idx] < 0) continue;
    auto [it, fresh] = dense.try_emplace(label[idx], static_cast<std::int32_t>(dense.size()));
    if (fresh) out.component_sizes.push_back(0);
    out.labels[idx] = it->second;
    ++out.component_sizes[static_cast<std::size_t>(it->second)];
  }
  return out;
}

namespace {

// sqrt(k) written as coeff * sqrt(radicand) with radicand square-free.
void add_sqrt_term(std::map<long long, long long>& form, long long k) {
  if (k == 0) return;
  long long coeff = 1;
  long long radicand = k;
  for (long long p = 2; p * p <= radicand; ++p) {
    while (radicand % (p * p) == 0) {
      radicand /= p * p;
      coeff *= p;
    }
  }
  form[radicand] += coeff;
}

struct SumSqrtSearch {
  long long low = 0;
  long long high = 0;
  long long total = 0;
  int r = 0;
  std::vector<long long> current;
  long double best_value = 0;
  std::map<long long, long long> best_form;
  MinSumSqrtResult result;

  void consider() {
    std::map<long long, long long> form;
    long double value = 0;
    for (long long k : current) {
      add_sqrt_term(form, k);
      value += std::sqrt(static_cast<long double>(k));
    }
    if (result.witnesses.empty() || form == best_form) {
      if (result.witnesses.empty()) {
        best_value = value;
        best_form = std::move(form);
      }
      result.witnesses.push_back(current);
    } else if (value < best_value) {
      best_value = value;
      best_form = std::move(form);
      result.witnesses.clear();
      result.witnesses.push_back(current);
    }
  }

  void recurse(int pos, long long min_entry, long long remaining) {
    int slots = r - pos;
    if (slots == 0) {
      if (remaining == 0) consider();
      return;
    }
    // prune: remaining must be reachable with `slots` entries in
    // [min_entry, high] (entries stay non-decreasing)
    long long lo = std::max(min_entry, low);
    if (remaining < lo * slots || remaining > high * slots) return;
    for (long long k = lo; k <= high && k * slots <= remaining; ++k) {
      if (remaining - k < low * (slots - 1)) break;
      current[static_cast<std::size_t>(pos)] = k;
      recurse(pos + 1, k, remaining - k);
    }
  }
};

}  // namespace

MinSumSqrtResult min_sum_sqrt(int r, long long low, long long high, long long total) {
  if (r < 2) throw std::invalid_argument("tuple length must be at least 2");
  if (low < 0 || low >= high) throw std::invalid_argument("need 0 <= low < high");
  if (total < low * r || total > high * r) {
    throw std::invalid_argument("total is not reachable with the given bounds");
  }

  SumSqrtSearch search;
  search.low = low;
  search.high = high;
  search.total = total;
  search.r = r;
  search.current.assign(static_cast<std::size_t>(r), 0);
  search.recurse(0, low, total);

  MinSumSqrtResult out = std::move(search.result);
  out.min_value = static_cast<double>(search.best_value);
  for (const auto& witness : out.witnesses) {
    int interior = 0;
    for (long long k : witness) {
      if (k != low && k != high) ++interior;
    }
    if (interior <= 1) {
      out.extreme_witness_exists = true;
      break;
    }
  }
  return out;
}

BinaryImage image_from_code(int width, int height, std::uint64_t code) {
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(width) * height, 0);
  for (std::size_t j = 0; j < cells.size(); ++j) {
    cells[j] = (code >> j) & 1u;
  }
  return BinaryImage(width, height, std::move(cells));
}

SweepReport enumerate_images(int width, int height, const SweepVisitor& visitor, int jobs) {
  if (width < 1 || height < 1) throw std::invalid_argument("grid sides must be positive");
  if (width * height > 25) throw std::invalid_argument("grid too large to enumerate");
  if (jobs < 1) throw std::invalid_argument("jobs must be positive");

  const std::uint64_t total = std::uint64_t{1} << (width * height);
  SweepReport report;
  report.grid_width = width;
  report.grid_height = height;
  report.images_checked = total;

  if (jobs == 1) {
    for (std::uint64_t code = 0; code < total; ++code) {
      visitor(code, image_from_code(width, height, code), report.violations);
    }
  } else {
    std::vector<std::vector<Violation>> partial(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
      std::uint64_t begin = total / static_cast<std::uint64_t>(jobs) * t;
      std::uint64_t end =
          t + 1 == jobs ? total : total / static_cast<std::uint64_t>(jobs) * (t + 1);
      workers.emplace_back([&, begin, end, t] {
        for (std::uint64_t code = begin; code < end; ++code) {
          visitor(code, image_from_code(width, height, code), partial[static_cast<std::size_t>(t)]);
        }
      });
    }
    for (auto& worker : workers) worker.join();
    for (auto& chunk : partial) {
      report.violations.insert(report.violations.end(), chunk.begin(), chunk.end());
    }
  }

  // Canonical order, so the report is independent of the partitioning.
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.image_code, a.check_id, a.detail) <
                     std::tie(b.image_code, b.check_id, b.detail);
            });
  return report;
}

namespace {

std::string pair_detail(const char* a_name, long long a, const char* b_name, long long b) {
  return std::string(a_name) + "=" + std::to_string(a) + " " + b_name + "=" + std::to_string(b);
}

void check_paths(std::uint64_t code, const BinaryImage& image, const BoundaryPathSet& set,
                 std::size_t edge_count, int level, std::vector<Violation>& out) {
  (void)image;
  std::size_t covered = 0;
  for (const auto& path : set.paths) covered += path.edges.size();
  if (covered != edge_count) {
    out.push_back({code, "paths-cover",
                   pair_detail("covered", static_cast<long long>(covered), "edges",
                               static_cast<long long>(edge_count))});
  }
  for (const auto& path : set.paths) {
    long long straight = path.straight_count;
    long long reentrant = path.reentrant_count;
    long long salient = path.salient_count;
    long long length = static_cast<long long>(path.length());
    if (path.ones_side == PathSide::inside) {
      if (salient != reentrant + 4 || length != straight + 2 * reentrant + 4) {
        out.push_back({code, "path-identity-inside",
                       pair_detail("length", length, "level", level)});
      }
    } else {
      if (reentrant != salient + 4 || length != straight + 2 * reentrant - 4) {
        out.push_back({code, "path-identity-outside",
                       pair_detail("length", length, "level", level)});
      }
      if (level >= 1 && length < 8 * level + 4) {
        out.push_back({code, "path-outside-minlen",
                       pair_detail("length", length, "level", level)});
      }
    }
  }
}

void run_battery(std::uint64_t code, const BinaryImage& image, std::vector<Violation>& out) {
  try {
    const long long area = bitgrid::area(image);
    const auto labeling = label_components(image);
    const auto holes = detect_holes(image, labeling);
    const auto edges = boundary_edges(image);
    const auto field = distance_field(image);
    const long long length = static_cast<long long>(edges.size());
    const int maxd = field.max_distance();
    const auto levels = level_counts(field);

    std::vector<long long> ib_lengths;  // ib_lengths[i] = edge count of the i-boundary
    ib_lengths.push_back(length);
    std::vector<std::vector<EdgeId>> ib_edges;
    for (int i = 1; i <= maxd; ++i) {
      ib_edges.push_back(iboundary_edges(image, field, i));
      ib_lengths.push_back(static_cast<long long>(ib_edges.back().size()));
    }

    if (length * length < 16 * area) {
      out.push_back({code, "lemma2", pair_detail("l", length, "N", area)});
    }
    long long l1 = maxd >= 1 ? ib_lengths[1] : 0;
    if (l1 > 3 * length) {
      out.push_back({code, "lemma3", pair_detail("l1", l1, "l0", length)});
    }
    for (int i = 1; i + 1 <= maxd; ++i) {
      if ((2 * i + 1) * ib_lengths[static_cast<std::size_t>(i) + 1] >
          (2 * i + 3) * ib_lengths[static_cast<std::size_t>(i)]) {
        out.push_back({code, "lemma4." + std::to_string(i),
                       pair_detail("next", ib_lengths[static_cast<std::size_t>(i) + 1], "curr",
                                   ib_lengths[static_cast<std::size_t>(i)])});
      }
    }
    for (int i = 0; i <= maxd; ++i) {
      if (levels[static_cast<std::size_t>(i)] > (2 * i + 1) * length) {
        out.push_back({code, "lemma5." + std::to_string(i),
                       pair_detail("count", levels[static_cast<std::size_t>(i)], "l0", length)});
      }
    }

    if (area >= 1) {
      long long kstar = 0;
      while (area > (kstar + 1) * (kstar + 1) * length) ++kstar;
      if (maxd < kstar) {
        out.push_back({code, "theorem4", pair_detail("maxd", maxd, "needs", kstar)});
      }
      if (holes.hole_free) {
        long long floor_bound = area / length;
        if (maxd < floor_bound) {
          out.push_back({code, "theorem5", pair_detail("maxd", maxd, "needs", floor_bound)});
        }
        if (kstar > floor_bound + 1) {
          out.push_back({code, "t4-vs-t5", pair_detail("t4", kstar, "t5", floor_bound)});
        }
        // Strictly shrinking level counts, capped by the boundary length.
        if (levels[0] >= length) {
          out.push_back({code, "chain-strict", pair_detail("A0", levels[0], "l0", length)});
        }
        for (int i = 1; i <= maxd; ++i) {
          if (levels[static_cast<std::size_t>(i)] >= levels[static_cast<std::size_t>(i) - 1]) {
            out.push_back({code, "chain-strict",
                           pair_detail("level", i, "count",
                                       levels[static_cast<std::size_t>(i)])});
          }
        }
      }
    }

    for (int r = 0; r < image.height(); ++r) {
      for (int c = 0; c < image.width(); ++c) {
        if (!image.one(r, c)) continue;
        int d = field.at(r, c);
        long long comp_size =
            labeling.component_sizes[static_cast<std::size_t>(labeling.label_at(r, c))];
        if (comp_size < ball_cell_count(d)) {
          out.push_back({code, "ball-component",
                         pair_detail("component", comp_size, "ball", ball_cell_count(d))});
        }
      }
    }

    const auto naive_field = naive_distance_field(image);
    if (naive_field.distance != field.distance) {
      out.push_back({code, "dist-oracle", "distance fields disagree"});
    }
    const auto naive_labels = naive_label_components(image);
    if (naive_labels.labels != labeling.labels ||
        naive_labels.component_sizes != labeling.component_sizes) {
      out.push_back({code, "label-oracle", "component labelings disagree"});
    }

    check_paths(code, image, decompose_boundary_paths(image), edges.size(), 0, out);
    for (int i = 1; i <= maxd; ++i) {
      check_paths(code, image, decompose_iboundary_paths(image, field, i),
                  ib_edges[static_cast<std::size_t>(i) - 1].size(), i, out);
    }
  } catch (const std::exception& e) {
    out.push_back({code, "internal-error", e.what()});
  }
}

}  // namespace

SweepReport exhaustive_verify(int width, int height, int jobs) {
  return enumerate_images(width, height, run_battery, jobs);
}

}  // namespace bitgrid
