#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bitgrid/image.hpp"

namespace bitgrid {

enum class Satisfaction { yes, no, not_evaluated };

// A bound value that stays exact whenever the underlying quantity is
// rational: num/den when exact (den == 1 for plain integers), otherwise a
// floating approximation (e.g. 4*sqrt(N) for non-square N).
struct BoundValue {
  long long num = 0;
  long long den = 1;
  double approx = 0.0;
  bool exact = true;

  static BoundValue integer(long long v);
  static BoundValue rational(long long num, long long den);  // den > 0, reduced on entry
  static BoundValue approximate(double v);

  bool is_integer() const { return exact && den == 1; }
  double value() const;
};

struct BoundEntry {
  std::string id;
  bool applicable = false;
  BoundValue bound;
  std::optional<long long> actual;  // absent when the quantity is undefined (e.g. empty image)
  Satisfaction satisfied = Satisfaction::not_evaluated;
  std::string note;  // empty when there is nothing to add
};

// Everything the checks need, computed once per image.
struct ImageMetrics {
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
  std::vector<long long> level_counts;       // cells at distance exactly i, i = 0..max
  std::vector<long long> iboundary_lengths;  // edge counts l_0 (the boundary), l_1, ..., l_max
};

ImageMetrics compute_metrics(const BinaryImage& image);

// Isoperimetric floor on the boundary length: l >= 4*sqrt(N), decided
// exactly as l^2 >= 16N. Always applicable.
BoundEntry lemma2_check(const ImageMetrics& metrics);

// The i-boundary/level-count chain, one entry per applicable index:
//   lemma3          l_1 <= 3 * l_0
//   lemma4.<i>      (2i+1) * l_{i+1} <= (2i+3) * l_i        for 1 <= i < max
//   lemma5.<i>      A_i <= (2i+1) * l_0                     for 0 <= i <= max
//   chain-strict.<i>  A_i < A_{i-1} (A_0 < l_0)             hole-free images only
// All comparisons are exact integer arithmetic.
std::vector<BoundEntry> lemma_chain_checks(const ImageMetrics& metrics);

// Largest-component floor m^2 - c^2 for images with N = m^2 ones and
// boundary length 4m + 4c. Applicable only when both shape equations hold
// and (m, c) clears the two size conditions under which the bound is
// guaranteed. Throws std::invalid_argument unless m, c >= 1.
BoundEntry theorem1_check(const ImageMetrics& metrics, long long m, long long c);

// Largest-component floor m^2/c^2 for images with N = m^2 ones and boundary
// length 4mc, when c divides m and m >= c(c+1). Throws std::invalid_argument
// unless m, c >= 1.
BoundEntry theorem2_check(const ImageMetrics& metrics, long long m, long long c);

// Largest-component strict floor N/c^2 - 1 for images whose boundary length
// is at most 4c*sqrt(N), for real c > 1. The guarantee needs N large
// relative to c; when the strict bound fails but N is below that size
// threshold the entry is downgraded to informational (applicable = false).
// Throws std::invalid_argument unless c > 1.
BoundEntry theorem3_check(const ImageMetrics& metrics, double c);

// Inscribed-ball floor: max ball radius >= ceil(sqrt(N/l) - 1), evaluated in
// integers as the smallest k >= 0 with N <= (k+1)^2 * l. Applicable when N >= 1.
BoundEntry theorem4_check(const ImageMetrics& metrics);

// Inscribed-ball floor for hole-free images: max ball radius >= floor(N/l).
BoundEntry theorem5_check(const ImageMetrics& metrics);

struct BoundHints {
  std::optional<long long> m;
  std::optional<long long> c;
};

// Every check in document order. The component-bound entries (theorem1/2/3)
// need parameters (m, c): explicit hints win; otherwise they are inferred as
// m = sqrt(N), c = l/4 - m when N is a perfect square and that c is a
// positive integer, and the inference is flagged in the note. The theorem3
// entry is emitted only when c > 1 (its parameter domain).
std::vector<BoundEntry> full_report(const ImageMetrics& metrics, const BoundHints& hints = {});

// True iff no applicable entry is unsatisfied.
bool all_applicable_satisfied(const std::vector<BoundEntry>& entries);

}  // namespace bitgrid
