#include "bitgrid/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bitgrid/geometry.hpp"
#include "bitgrid/topology.hpp"

namespace bitgrid {

BoundValue BoundValue::integer(long long v) {
  BoundValue out;
  out.num = v;
  out.den = 1;
  out.approx = static_cast<double>(v);
  out.exact = true;
  return out;
}

BoundValue BoundValue::rational(long long num, long long den) {
  if (den <= 0) throw std::invalid_argument("rational bound needs a positive denominator");
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  BoundValue out;
  out.num = num;
  out.den = den;
  out.approx = static_cast<double>(num) / static_cast<double>(den);
  out.exact = true;
  return out;
}

BoundValue BoundValue::approximate(double v) {
  BoundValue out;
  out.exact = false;
  out.approx = v;
  return out;
}

double BoundValue::value() const {
  return exact ? static_cast<double>(num) / static_cast<double>(den) : approx;
}

namespace {

long long isqrt_floor(long long n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative value");
  auto root = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (root > 0 && root * root > n) --root;
  while ((root + 1) * (root + 1) <= n) ++root;
  return root;
}

Satisfaction verdict(bool ok) { return ok ? Satisfaction::yes : Satisfaction::no; }

std::string join_note(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "; " + b;
}

}  // namespace

ImageMetrics compute_metrics(const BinaryImage& image) {
  ImageMetrics m;
  m.width = image.width();
  m.height = image.height();
  m.area = area(image);

  const auto labeling = label_components(image);
  m.component_count = labeling.component_count();
  m.component_sizes.assign(labeling.component_sizes.begin(), labeling.component_sizes.end());
  std::sort(m.component_sizes.begin(), m.component_sizes.end(), std::greater<>());
  m.largest_component = m.component_sizes.empty() ? 0 : m.component_sizes.front();

  const auto holes = detect_holes(image, labeling);
  m.hole_count = static_cast<int>(holes.hole_regions.size());
  m.hole_free = holes.hole_free;

  const auto field = distance_field(image);
  m.boundary_length = static_cast<long long>(boundary_edges(image).size());
  m.max_ball_radius = max_ball_radius(field);

  const auto levels = level_counts(field);
  m.level_counts.assign(levels.begin(), levels.end());
  if (m.area > 0) {
    m.iboundary_lengths.push_back(m.boundary_length);
    for (int i = 1; i <= *m.max_ball_radius; ++i) {
      m.iboundary_lengths.push_back(
          static_cast<long long>(iboundary_edges(image, field, i).size()));
    }
  }
  return m;
}

BoundEntry lemma2_check(const ImageMetrics& metrics) {
  BoundEntry e;
  e.id = "lemma2";
  e.applicable = true;
  const long long n = metrics.area;
  const long long l = metrics.boundary_length;
  long long root = isqrt_floor(n);
  e.bound = root * root == n ? BoundValue::integer(4 * root)
                             : BoundValue::approximate(4.0 * std::sqrt(static_cast<double>(n)));
  e.actual = l;
  e.satisfied = verdict(l * l >= 16 * n);
  if (e.satisfied == Satisfaction::yes && root * root == n && l == 4 * root) {
    e.note = "bound attained exactly (sharp)";
  }
  return e;
}

std::vector<BoundEntry> lemma_chain_checks(const ImageMetrics& metrics) {
  std::vector<BoundEntry> out;
  const long long l0 = metrics.boundary_length;
  const auto& lengths = metrics.iboundary_lengths;
  const auto& levels = metrics.level_counts;
  const int max_d = metrics.max_ball_radius.value_or(-1);

  BoundEntry l3;
  l3.id = "lemma3";
  l3.applicable = true;
  l3.bound = BoundValue::integer(3 * l0);
  l3.actual = max_d >= 1 ? lengths[1] : 0;
  l3.satisfied = verdict(*l3.actual <= 3 * l0);
  out.push_back(std::move(l3));

  for (int i = 1; i + 1 <= max_d; ++i) {
    BoundEntry e;
    e.id = "lemma4." + std::to_string(i);
    e.applicable = true;
    e.bound = BoundValue::rational((2 * i + 3) * lengths[static_cast<std::size_t>(i)], 2 * i + 1);
    e.actual = lengths[static_cast<std::size_t>(i) + 1];
    e.satisfied = verdict((2 * i + 1) * *e.actual <= (2 * i + 3) * lengths[static_cast<std::size_t>(i)]);
    out.push_back(std::move(e));
  }

  for (int i = 0; i <= max_d; ++i) {
    BoundEntry e;
    e.id = "lemma5." + std::to_string(i);
    e.applicable = true;
    e.bound = BoundValue::integer((2 * i + 1) * l0);
    e.actual = levels[static_cast<std::size_t>(i)];
    e.satisfied = verdict(*e.actual <= (2 * i + 1) * l0);
    out.push_back(std::move(e));
  }

  if (metrics.hole_free) {
    for (int i = 0; i <= max_d; ++i) {
      BoundEntry e;
      e.id = "chain-strict." + std::to_string(i);
      e.applicable = true;
      long long ceiling = i == 0 ? l0 : levels[static_cast<std::size_t>(i) - 1];
      e.bound = BoundValue::integer(ceiling);
      e.actual = levels[static_cast<std::size_t>(i)];
      e.satisfied = verdict(*e.actual < ceiling);
      e.note = i == 0 ? "strict: cells at distance 0 must stay below the boundary length"
                      : "strict: each level must be smaller than the previous one";
      out.push_back(std::move(e));
    }
  }
  return out;
}

BoundEntry theorem1_check(const ImageMetrics& metrics, long long m, long long c) {
  if (m < 1 || c < 1) throw std::invalid_argument("m and c must be positive");
  BoundEntry e;
  e.id = "theorem1";
  e.bound = BoundValue::integer(m * m - c * c);
  e.actual = metrics.largest_component;

  std::string why;
  if (metrics.area != m * m) {
    why = "not applicable: area differs from m^2";
  } else if (metrics.boundary_length != 4 * m + 4 * c) {
    why = "not applicable: boundary length differs from 4m+4c";
  } else {
    // The guarantee needs m large relative to c; the exact thresholds are
    // 2(m+c)sqrt(c^2+1) > 3c^2 + 2mc + 2 (squared below to stay in integers)
    // and m^2 > c^2(m+c).
    using wide = __int128;
    wide lhs = wide{4} * (m + c) * (m + c) * (c * c + 1);
    wide rhs = (wide{3} * c * c + wide{2} * m * c + 2) * (wide{3} * c * c + wide{2} * m * c + 2);
    if (lhs <= rhs) {
      why = "not applicable: m is too small relative to c for the bound to be guaranteed";
    } else if (m * m <= c * c * (m + c)) {
      why = "not applicable: m^2 must exceed c^2(m+c)";
    }
  }

  if (why.empty()) {
    e.applicable = true;
    e.satisfied = verdict(metrics.largest_component >= m * m - c * c);
  } else {
    e.note = why;
  }
  if (metrics.largest_component == m * m - c * c) {
    e.note = join_note(e.note, "bound attained exactly (sharp)");
  }
  return e;
}

BoundEntry theorem2_check(const ImageMetrics& metrics, long long m, long long c) {
  if (m < 1 || c < 1) throw std::invalid_argument("m and c must be positive");
  BoundEntry e;
  e.id = "theorem2";
  e.actual = metrics.largest_component;

  std::string why;
  if (m % c != 0) {
    why = "not applicable: c does not divide m";
  } else if (m < c * (c + 1)) {
    why = "not applicable: m must be at least c(c+1)";
  } else if (metrics.area != m * m) {
    why = "not applicable: area differs from m^2";
  } else if (metrics.boundary_length != 4 * m * c) {
    why = "not applicable: boundary length differs from 4mc";
  }

  long long bound = m % c == 0 ? (m / c) * (m / c) : 0;
  e.bound = BoundValue::integer(bound);
  if (why.empty()) {
    e.applicable = true;
    e.satisfied = verdict(metrics.largest_component >= bound);
  } else {
    e.note = why;
  }
  if (m % c == 0 && metrics.largest_component == bound) {
    e.note = join_note(e.note, "bound attained exactly (sharp)");
  }
  return e;
}

BoundEntry theorem3_check(const ImageMetrics& metrics, double c) {
  if (!(c > 1.0)) throw std::invalid_argument("c must exceed 1");
  BoundEntry e;
  e.id = "theorem3";
  e.actual = metrics.largest_component;

  const long long n = metrics.area;
  const long long l = metrics.boundary_length;
  const double c2 = c * c;

  // Exact rational bound when c^2 is integral, floating otherwise.
  bool c_integral = c == std::floor(c);
  long long c2_int = c_integral ? static_cast<long long>(c) * static_cast<long long>(c) : 0;
  e.bound = c_integral ? BoundValue::rational(n - c2_int, c2_int)
                       : BoundValue::approximate(static_cast<double>(n) / c2 - 1.0);

  if (n < 1) {
    e.note = "not applicable: empty image";
    return e;
  }
  if (static_cast<double>(l) * static_cast<double>(l) > 16.0 * c2 * static_cast<double>(n)) {
    e.note = "not applicable: boundary length exceeds 4c*sqrt(N)";
    return e;
  }

  const long long t = metrics.largest_component;
  bool strict_ok = c_integral ? (t + 1) * c2_int > n
                              : (static_cast<double>(t) + 1.0) * c2 > static_cast<double>(n);
  if (strict_ok) {
    e.applicable = true;
    e.satisfied = Satisfaction::yes;
    return e;
  }

  // The bound is only guaranteed once N is large relative to c. The size
  // conditions, with q = sqrt(N)/c and c^2 + delta the smallest integer
  // strictly above c^2:
  //   (a) delta * q^2 > 2(c^2 + delta)
  //   (b) q >= 2
  //   (c) c^2 integral:      q(2c^3 - 2c^2) >= 2c^4 + c^2 - 2c + 1
  //       c^2 not integral:  (sqrt(c^2-v) - (c^2-v)) * q >= 2v with v = floor(c^2)
  const double q = std::sqrt(static_cast<double>(n)) / c;
  const double delta = std::floor(c2) + 1.0 - c2;
  bool large = delta * q * q > 2.0 * (c2 + delta) && q >= 2.0;
  if (c2 == std::floor(c2)) {
    large = large && q * (2.0 * c2 * c - 2.0 * c2) >= 2.0 * c2 * c2 + c2 - 2.0 * c + 1.0;
  } else {
    double v = std::floor(c2);
    double frac = c2 - v;
    large = large && (std::sqrt(frac) - frac) * q >= 2.0 * v;
  }

  if (large) {
    e.applicable = true;
    e.satisfied = Satisfaction::no;
  } else {
    e.note =
        "informational: largest component is at or below N/c^2 - 1, but N is too small "
        "relative to c for the bound to be guaranteed";
  }
  return e;
}

BoundEntry theorem4_check(const ImageMetrics& metrics) {
  BoundEntry e;
  e.id = "theorem4";
  const long long n = metrics.area;
  const long long l = metrics.boundary_length;
  if (n < 1) {
    e.bound = BoundValue::integer(0);
    e.note = "not applicable: empty image";
    return e;
  }
  // ceil(sqrt(N/l) - 1) as the smallest k >= 0 with N <= (k+1)^2 * l.
  long long k = 0;
  while (n > (k + 1) * (k + 1) * l) ++k;
  e.applicable = true;
  e.bound = BoundValue::integer(k);
  e.actual = *metrics.max_ball_radius;
  e.satisfied = verdict(*e.actual >= k);
  return e;
}

BoundEntry theorem5_check(const ImageMetrics& metrics) {
  BoundEntry e;
  e.id = "theorem5";
  const long long n = metrics.area;
  const long long l = metrics.boundary_length;
  if (n < 1) {
    e.bound = BoundValue::integer(0);
    e.note = "not applicable: empty image";
    return e;
  }
  e.bound = BoundValue::integer(n / l);
  e.actual = *metrics.max_ball_radius;
  if (!metrics.hole_free) {
    e.note = "not applicable: the image has holes";
    return e;
  }
  e.applicable = true;
  e.satisfied = verdict(*e.actual >= n / l);
  return e;
}

std::vector<BoundEntry> full_report(const ImageMetrics& metrics, const BoundHints& hints) {
  std::vector<BoundEntry> out;
  out.push_back(lemma2_check(metrics));
  auto chain = lemma_chain_checks(metrics);
  out.insert(out.end(), std::make_move_iterator(chain.begin()),
             std::make_move_iterator(chain.end()));

  std::optional<std::pair<long long, long long>> params;
  bool inferred = false;
  if (hints.m.has_value() && hints.c.has_value()) {
    params.emplace(*hints.m, *hints.c);
  } else if (metrics.area >= 1) {
    long long root = isqrt_floor(metrics.area);
    if (root * root == metrics.area) {
      long long rest = metrics.boundary_length - 4 * root;
      if (rest >= 4 && rest % 4 == 0) {
        params.emplace(root, rest / 4);
        inferred = true;
      }
    }
  }

  if (params.has_value()) {
    const std::string flag = "parameters m, c inferred from area and boundary length";
    auto e1 = theorem1_check(metrics, params->first, params->second);
    if (inferred) e1.note = join_note(flag, e1.note);
    out.push_back(std::move(e1));
    auto e2 = theorem2_check(metrics, params->first, params->second);
    if (inferred) e2.note = join_note(flag, e2.note);
    out.push_back(std::move(e2));
    if (params->second > 1) {
      auto e3 = theorem3_check(metrics, static_cast<double>(params->second));
      if (inferred) e3.note = join_note(flag, e3.note);
      out.push_back(std::move(e3));
    }
  }

  out.push_back(theorem4_check(metrics));
  out.push_back(theorem5_check(metrics));
  return out;
}

bool all_applicable_satisfied(const std::vector<BoundEntry>& entries) {
  for (const auto& e : entries) {
    if (e.applicable && e.satisfied != Satisfaction::yes) return false;
  }
  return true;
}

}  // namespace bitgrid
