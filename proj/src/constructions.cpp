#include "bitgrid/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace bitgrid {

namespace {

// Cap on each raw parameter: keeps every closed-form polynomial (degree <= 4)
// inside long long; the BinaryImage constructor enforces the real cell limit.
constexpr long long kMaxParam = 10'000;

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

std::vector<std::uint8_t> blank(long long width, long long height) {
  return std::vector<std::uint8_t>(static_cast<std::size_t>(width * height), 0);
}

void fill_rect(std::vector<std::uint8_t>& cells, long long canvas_width, long long top,
               long long left, long long rows, long long cols) {
  for (long long r = top; r < top + rows; ++r) {
    for (long long c = left; c < left + cols; ++c) {
      cells[static_cast<std::size_t>(r * canvas_width + c)] = 1;
    }
  }
}

}  // namespace

std::string construction_kind_name(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::square: return "square";
    case ConstructionKind::theorem1_extremal: return "theorem1-extremal";
    case ConstructionKind::theorem2_extremal: return "theorem2-extremal";
    case ConstructionKind::hole_lattice: return "hole-lattice";
    case ConstructionKind::rectangle: return "rectangle";
    case ConstructionKind::ball: return "ball";
  }
  throw std::logic_error("unknown construction kind");
}

BinaryImage square_image(long long m) {
  require(m >= 1, "m must be at least 1");
  require(m <= kMaxParam, "m too large");
  auto cells = blank(m, m);
  fill_rect(cells, m, 0, 0, m, m);
  return BinaryImage(static_cast<int>(m), static_cast<int>(m), std::move(cells));
}

BinaryImage theorem1_extremal(long long m, long long c) {
  require(c >= 1, "c must be at least 1");
  require(m > c, "m must exceed c");
  require(m <= kMaxParam, "m too large");
  const long long width = m + 2 * c + 1;
  const long long height = m + c;
  auto cells = blank(width, height);
  fill_rect(cells, width, 0, 0, m - c, m + c);          // (m-c) x (m+c) rectangle
  fill_rect(cells, width, 0, m + c + 1, c, c);          // c x c square past a one-column gap
  return BinaryImage(static_cast<int>(width), static_cast<int>(height), std::move(cells));
}

BinaryImage theorem2_extremal(long long m, long long c) {
  require(c >= 1, "c must be at least 1");
  require(m >= c, "m must be at least c");
  require(m % c == 0, "c must divide m");
  require(m <= kMaxParam, "m too large");
  const long long n = m / c;
  const long long side = c * (n + 1) - 1;  // c blocks of side n with one-cell gaps
  auto cells = blank(side, side);
  for (long long i = 0; i < c; ++i) {
    for (long long j = 0; j < c; ++j) {
      fill_rect(cells, side, i * (n + 1), j * (n + 1), n, n);
    }
  }
  return BinaryImage(static_cast<int>(side), static_cast<int>(side), std::move(cells));
}

BinaryImage hole_lattice(long long u, long long c) {
  require(u >= 2, "u must be at least 2");
  require(c >= 1, "c must be at least 1");
  require(u <= kMaxParam && c <= kMaxParam, "u, c too large");
  const long long side = c * u * u + u - 1;
  auto cells = blank(side, side);
  fill_rect(cells, side, 0, 0, side, side);
  // Zero out every cell whose 1-based coordinates are both multiples of u.
  for (long long i = u; i <= side; i += u) {
    for (long long j = u; j <= side; j += u) {
      cells[static_cast<std::size_t>((i - 1) * side + (j - 1))] = 0;
    }
  }
  return BinaryImage(static_cast<int>(side), static_cast<int>(side), std::move(cells));
}

BinaryImage rectangle_image(long long a, long long t) {
  require(a >= 1, "a must be at least 1");
  require(t >= 1, "t must be at least 1");
  require(a <= kMaxParam && t <= kMaxParam, "a, t too large");
  const long long width = t * a;
  auto cells = blank(width, a);
  fill_rect(cells, width, 0, 0, a, width);
  return BinaryImage(static_cast<int>(width), static_cast<int>(a), std::move(cells));
}

BinaryImage ball_image(long long k) {
  require(k >= 0, "k must be nonnegative");
  require(k <= kMaxParam, "k too large");
  const long long side = 2 * k + 1;
  auto cells = blank(side, side);
  for (long long r = 0; r < side; ++r) {
    for (long long col = 0; col < side; ++col) {
      long long dr = r > k ? r - k : k - r;
      long long dc = col > k ? col - k : k - col;
      if (dr + dc <= k) cells[static_cast<std::size_t>(r * side + col)] = 1;
    }
  }
  return BinaryImage(static_cast<int>(side), static_cast<int>(side), std::move(cells));
}

Construction build_square(long long m) {
  BinaryImage image = square_image(m);
  ExpectedMetrics e;
  e.width = e.height = static_cast<int>(m);
  e.area = m * m;
  e.boundary_length = 4 * m;
  e.component_count = 1;
  e.component_sizes = {m * m};
  e.largest_component = m * m;
  e.hole_count = 0;
  e.hole_free = true;
  e.max_ball_radius = static_cast<int>((m - 1) / 2);
  return {ConstructionKind::square, {{"m", m}}, std::move(image), std::move(e)};
}

Construction build_theorem1_extremal(long long m, long long c) {
  BinaryImage image = theorem1_extremal(m, c);
  ExpectedMetrics e;
  e.width = static_cast<int>(m + 2 * c + 1);
  e.height = static_cast<int>(m + c);
  e.area = m * m;
  e.boundary_length = 4 * m + 4 * c;
  e.component_count = 2;
  e.component_sizes = {m * m - c * c, c * c};
  std::sort(e.component_sizes.begin(), e.component_sizes.end(), std::greater<>());
  e.largest_component = e.component_sizes.front();
  e.hole_count = 0;
  e.hole_free = true;
  e.max_ball_radius = static_cast<int>(std::max((m - c - 1) / 2, (c - 1) / 2));
  return {ConstructionKind::theorem1_extremal,
          {{"m", m}, {"c", c}},
          std::move(image),
          std::move(e)};
}

Construction build_theorem2_extremal(long long m, long long c) {
  BinaryImage image = theorem2_extremal(m, c);
  const long long n = m / c;
  ExpectedMetrics e;
  e.width = e.height = static_cast<int>(c * (n + 1) - 1);
  e.area = m * m;
  e.boundary_length = 4 * m * c;
  e.component_count = static_cast<int>(c * c);
  e.component_sizes.assign(static_cast<std::size_t>(c * c), n * n);
  e.largest_component = n * n;
  e.hole_count = 0;
  e.hole_free = true;
  e.max_ball_radius = static_cast<int>((n - 1) / 2);
  return {ConstructionKind::theorem2_extremal,
          {{"m", m}, {"c", c}},
          std::move(image),
          std::move(e)};
}

Construction build_hole_lattice(long long u, long long c) {
  BinaryImage image = hole_lattice(u, c);
  const long long side = c * u * u + u - 1;
  const long long holes = c * u * c * u;
  ExpectedMetrics e;
  e.width = e.height = static_cast<int>(side);
  e.area = side * side - holes;
  e.boundary_length = 4 * (c * c + c) * u * u + 4 * u - 4;
  e.component_count = 1;
  e.component_sizes = {e.area};
  e.largest_component = e.area;
  e.hole_count = static_cast<int>(holes);
  e.hole_free = false;
  e.max_ball_radius = static_cast<int>(u % 2 == 1 ? u - 2 : u - 1);
  return {ConstructionKind::hole_lattice, {{"u", u}, {"c", c}}, std::move(image), std::move(e)};
}

Construction build_rectangle(long long a, long long t) {
  BinaryImage image = rectangle_image(a, t);
  ExpectedMetrics e;
  e.width = static_cast<int>(t * a);
  e.height = static_cast<int>(a);
  e.area = t * a * a;
  e.boundary_length = 2 * (t + 1) * a;
  e.component_count = 1;
  e.component_sizes = {e.area};
  e.largest_component = e.area;
  e.hole_count = 0;
  e.hole_free = true;
  e.max_ball_radius = static_cast<int>((a - 1) / 2);
  return {ConstructionKind::rectangle, {{"a", a}, {"t", t}}, std::move(image), std::move(e)};
}

Construction build_ball(long long k) {
  BinaryImage image = ball_image(k);
  ExpectedMetrics e;
  e.width = e.height = static_cast<int>(2 * k + 1);
  e.area = 2 * k * k + 2 * k + 1;
  e.boundary_length = 8 * k + 4;
  e.component_count = 1;
  e.component_sizes = {e.area};
  e.largest_component = e.area;
  e.hole_count = 0;
  e.hole_free = true;
  e.max_ball_radius = static_cast<int>(k);
  return {ConstructionKind::ball, {{"k", k}}, std::move(image), std::move(e)};
}

}  // namespace bitgrid
