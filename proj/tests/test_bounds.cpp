#include "doctest.h"

#include <string>
#include <vector>

#include "bitgrid/bounds.hpp"
#include "bitgrid/constructions.hpp"
#include "bitgrid/image.hpp"

using namespace bitgrid;

namespace {

BinaryImage from_rows(const std::vector<std::string>& rows) {
  std::string text;
  for (const auto& r : rows) {
    text += r;
    text += '\n';
  }
  return parse_image(text, ImageFormat::ascii_grid);
}

const BoundEntry& entry_with(const std::vector<BoundEntry>& entries, const std::string& id) {
  for (const auto& e : entries) {
    if (e.id == id) return e;
  }
  REQUIRE_MESSAGE(false, "missing entry ", id);
  static BoundEntry dummy;
  return dummy;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("metrics: full 5x5 square") {
  ImageMetrics m = compute_metrics(BinaryImage::filled(5, 5, 1));
  CHECK(m.width == 5);
  CHECK(m.height == 5);
  CHECK(m.area == 25);
  CHECK(m.boundary_length == 20);
  CHECK(m.component_count == 1);
  CHECK(m.component_sizes == std::vector<long long>{25});
  CHECK(m.largest_component == 25);
  CHECK(m.hole_count == 0);
  CHECK(m.hole_free);
  CHECK(m.max_ball_radius == 2);
  CHECK(m.level_counts == std::vector<long long>{16, 8, 1});
  CHECK(m.iboundary_lengths == std::vector<long long>{20, 12, 4});
}

TEST_CASE("metrics: empty image leaves depth fields empty") {
  ImageMetrics m = compute_metrics(BinaryImage::filled(3, 2, 0));
  CHECK(m.area == 0);
  CHECK(m.boundary_length == 0);
  CHECK(m.component_sizes.empty());
  CHECK(m.largest_component == 0);
  CHECK_FALSE(m.max_ball_radius.has_value());
  CHECK(m.level_counts.empty());
  CHECK(m.iboundary_lengths.empty());
  CHECK(m.hole_free);
}

TEST_CASE("metrics: component sizes sorted descending") {
  ImageMetrics m = compute_metrics(from_rows({"##..#", "##..#", ".....", "#...."}));
  CHECK(m.component_sizes == std::vector<long long>{4, 2, 1});
  CHECK(m.largest_component == 4);
}

TEST_CASE("bound values: integer, rational, approximate forms") {
  BoundValue i = BoundValue::integer(8);
  CHECK(i.is_integer());
  CHECK(i.value() == 8.0);

  BoundValue r = BoundValue::rational(5, 3);
  CHECK(r.exact);
  CHECK_FALSE(r.is_integer());
  CHECK(r.num == 5);
  CHECK(r.den == 3);

  // Reduction happens on entry, including negative numerators.
  BoundValue reduced = BoundValue::rational(-3, 6);
  CHECK(reduced.num == -1);
  CHECK(reduced.den == 2);
  BoundValue whole = BoundValue::rational(60, 3);
  CHECK(whole.is_integer());
  CHECK(whole.num == 20);

  CHECK_THROWS_AS(BoundValue::rational(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(BoundValue::rational(4, -2), std::invalid_argument);

  BoundValue a = BoundValue::approximate(0.5);
  CHECK_FALSE(a.exact);
  CHECK(a.value() == 0.5);
}

TEST_CASE("isoperimetric floor: l^2 >= 16N") {
  SUBCASE("sharp on squares") {
    BoundEntry e = lemma2_check(compute_metrics(BinaryImage::filled(5, 5, 1)));
    CHECK(e.applicable);
    CHECK(e.bound.is_integer());
    CHECK(e.bound.num == 20);
    CHECK(e.actual == 20);
    CHECK(e.satisfied == Satisfaction::yes);
    CHECK(contains(e.note, "sharp"));
  }
  SUBCASE("slack on split layouts") {
    BoundEntry e = lemma2_check(compute_metrics(build_theorem2_extremal(6, 2).image));
    CHECK(e.bound.num == 24);
    CHECK(e.actual == 48);
    CHECK(e.satisfied == Satisfaction::yes);
    CHECK(e.note.empty());
  }
  SUBCASE("non-square area gives an approximate bound") {
    BoundEntry e = lemma2_check(compute_metrics(from_rows({"##"})));
    CHECK_FALSE(e.bound.exact);
    CHECK(e.bound.value() == doctest::Approx(5.656854).epsilon(1e-6));
    CHECK(e.actual == 6);
    CHECK(e.satisfied == Satisfaction::yes);
  }
  SUBCASE("empty image is degenerate but satisfied") {
    BoundEntry e = lemma2_check(compute_metrics(BinaryImage::filled(2, 2, 0)));
    CHECK(e.satisfied == Satisfaction::yes);
    CHECK(e.bound.num == 0);
  }
}

TEST_CASE("ring chain: 5x5 square satisfies every link") {
  ImageMetrics m = compute_metrics(BinaryImage::filled(5, 5, 1));
  std::vector<BoundEntry> chain = lemma_chain_checks(m);

  std::vector<std::string> ids;
  for (const auto& e : chain) ids.push_back(e.id);
  CHECK(ids == std::vector<std::string>{"lemma3", "lemma4.1", "lemma5.0", "lemma5.1", "lemma5.2",
                                        "chain-strict.0", "chain-strict.1", "chain-strict.2"});

  const BoundEntry& l3 = entry_with(chain, "lemma3");
  CHECK(l3.bound.num == 60);
  CHECK(l3.actual == 12);
  CHECK(l3.satisfied == Satisfaction::yes);

  // (2i+3)/(2i+1) * l_i at i = 1: 5 * 12 / 3 reduces to a whole number.
  const BoundEntry& l4 = entry_with(chain, "lemma4.1");
  CHECK(l4.bound.is_integer());
  CHECK(l4.bound.num == 20);
  CHECK(l4.actual == 4);
  CHECK(l4.satisfied == Satisfaction::yes);

  CHECK(entry_with(chain, "lemma5.0").bound.num == 20);
  CHECK(entry_with(chain, "lemma5.0").actual == 16);
  CHECK(entry_with(chain, "lemma5.1").bound.num == 60);
  CHECK(entry_with(chain, "lemma5.2").bound.num == 100);
  CHECK(entry_with(chain, "lemma5.2").actual == 1);

  // 1 < 8 < 16 < 20 from the deepest level outward.
  CHECK(entry_with(chain, "chain-strict.0").bound.num == 20);
  CHECK(entry_with(chain, "chain-strict.0").actual == 16);
  CHECK(entry_with(chain, "chain-strict.1").bound.num == 16);
  CHECK(entry_with(chain, "chain-strict.1").actual == 8);
  CHECK(entry_with(chain, "chain-strict.2").bound.num == 8);
  CHECK(entry_with(chain, "chain-strict.2").actual == 1);
  for (const auto& e : chain) CHECK(e.satisfied == Satisfaction::yes);
}

TEST_CASE("ring chain: strict entries only appear for hole-free images") {
  ImageMetrics donut = compute_metrics(from_rows({"###", "#.#", "###"}));
  for (const auto& e : lemma_chain_checks(donut)) {
    CHECK_FALSE(contains(e.id, "chain-strict"));
  }

  ImageMetrics empty = compute_metrics(BinaryImage::filled(2, 2, 0));
  std::vector<BoundEntry> chain = lemma_chain_checks(empty);
  REQUIRE(chain.size() == 1);  // only the vacuous first-ring entry remains
  CHECK(chain[0].id == "lemma3");
  CHECK(chain[0].actual == 0);
  CHECK(chain[0].satisfied == Satisfaction::yes);
}

TEST_CASE("largest-component floor, additive flavour") {
  SUBCASE("applicable and sharp at (5,1)") {
    ImageMetrics m = compute_metrics(build_theorem1_extremal(5, 1).image);
    BoundEntry e = theorem1_check(m, 5, 1);
    CHECK(e.applicable);
    CHECK(e.bound.num == 24);
    CHECK(e.actual == 24);
    CHECK(e.satisfied == Satisfaction::yes);
    CHECK(contains(e.note, "sharp"));
  }
  SUBCASE("(10,2) fails the size threshold but still attains the bound") {
    ImageMetrics m = compute_metrics(build_theorem1_extremal(10, 2).image);
    BoundEntry e = theorem1_check(m, 10, 2);
    CHECK_FALSE(e.applicable);
    CHECK(e.satisfied == Satisfaction::not_evaluated);
    CHECK(e.bound.num == 96);
    CHECK(e.actual == 96);
    CHECK(contains(e.note, "not applicable"));
    CHECK(contains(e.note, "sharp"));
  }
  SUBCASE("(2,1) is far below the size threshold") {
    ImageMetrics m = compute_metrics(build_theorem1_extremal(2, 1).image);
    BoundEntry e = theorem1_check(m, 2, 1);
    CHECK_FALSE(e.applicable);
    CHECK(contains(e.note, "too small"));
  }
  SUBCASE("shape mismatches disable the check") {
    ImageMetrics m = compute_metrics(BinaryImage::filled(5, 5, 1));
    CHECK(contains(theorem1_check(m, 4, 1).note, "area"));
    CHECK(contains(theorem1_check(m, 5, 2).note, "boundary length"));
  }
  SUBCASE("parameters must be positive") {
    ImageMetrics m = compute_metrics(BinaryImage(1, 1, {1}));
    CHECK_THROWS_AS(theorem1_check(m, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(theorem1_check(m, 1, 0), std::invalid_argument);
  }
}

TEST_CASE("largest-component floor, multiplicative flavour") {
  SUBCASE("applicable and sharp at (6,2)") {
    ImageMetrics m = compute_metrics(build_theorem2_extremal(6, 2).image);
    BoundEntry e = theorem2_check(m, 6, 2);
    CHECK(e.applicable);
    CHECK(e.bound.num == 9);
    CHECK(e.actual == 9);
    CHECK(e.satisfied == Satisfaction::yes);
    CHECK(contains(e.note, "sharp"));
  }
  SUBCASE("divisibility gate") {
    ImageMetrics m = compute_metrics(build_theorem2_extremal(6, 2).image);
    BoundEntry e = theorem2_check(m, 6, 4);
    CHECK_FALSE(e.applicable);
    CHECK(contains(e.note, "does not divide"));
  }
  SUBCASE("m >= c(c+1) gate") {
    ImageMetrics m = compute_metrics(build_theorem2_extremal(4, 2).image);
    BoundEntry e = theorem2_check(m, 4, 2);
    CHECK_FALSE(e.applicable);
    CHECK(contains(e.note, "at least"));
  }
  SUBCASE("plain squares are the c = 1 case") {
    ImageMetrics m = compute_metrics(BinaryImage::filled(4, 4, 1));
    BoundEntry e = theorem2_check(m, 4, 1);
    CHECK(e.applicable);
    CHECK(e.bound.num == 16);
    CHECK(e.actual == 16);
    CHECK(e.satisfied == Satisfaction::yes);
    CHECK(contains(e.note, "sharp"));
  }
  SUBCASE("parameters must be positive") {
    ImageMetrics m = compute_metrics(BinaryImage(1, 1, {1}));
    CHECK_THROWS_AS(theorem2_check(m, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(theorem2_check(m, 1, 0), std::invalid_argument);
  }
}

TEST_CASE("largest-component floor, real-valued flavour") {
  SUBCASE("integral c gives an exact rational bound") {
    ImageMetrics m = compute_metrics(build_theorem2_extremal(6, 2).image);
    BoundEntry e = theorem3_check(m, 2.0);
    CHECK(e.applicable);
    CHECK(e.bound.exact);
    CHECK(e.bound.num == 8);
    CHECK(e.bound.den == 1);
    CHECK(e.actual == 9);
    CHECK(e.satisfied == Satisfaction::yes);
  }
  SUBCASE("fractional c gives an approximate bound") {
    ImageMetrics m = compute_metrics(BinaryImage::filled(2, 2, 1));
    BoundEntry e = theorem3_check(m, 1.5);
    CHECK_FALSE(e.bound.exact);
    CHECK(e.bound.value() == doctest::Approx(0.777778).epsilon(1e-5));
    CHECK(e.applicable);
    CHECK(e.satisfied == Satisfaction::yes);
  }
  SUBCASE("c must exceed 1") {
    ImageMetrics m = compute_metrics(BinaryImage(1, 1, {1}));
    CHECK_THROWS_AS(theorem3_check(m, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(theorem3_check(m, 0.5), std::invalid_argument);
  }
  SUBCASE("boundary too long for the premise") {
    // A lone cell has l = 4 > 4c when N = 1 forces 4c*sqrt(N) = 4c... use
    // spread-out singletons instead: N = 2, l = 8, c = 1.25 gives 4c*sqrt(2) ~ 7.07.
    ImageMetrics m = compute_metrics(from_rows({"#.#"}));
    BoundEntry e = theorem3_check(m, 1.25);
    CHECK_FALSE(e.applicable);
    CHECK(contains(e.note, "not applicable"));
  }
  SUBCASE("empty image") {
    ImageMetrics m = compute_metrics(BinaryImage::filled(2, 2, 0));
    BoundEntry e = theorem3_check(m, 2.0);
    CHECK_FALSE(e.applicable);
    CHECK(contains(e.note, "empty"));
  }
  SUBCASE("small images downgrade a miss to informational") {
    // Hand-built metrics: no real image has this profile, which is the point —
    // the guarantee needs N large, so the miss must not count as a violation.
    ImageMetrics m;
    m.area = 100;
    m.boundary_length = 10;
    m.largest_component = 1;
    BoundEntry e = theorem3_check(m, 3.0);
    CHECK_FALSE(e.applicable);
    CHECK(e.satisfied == Satisfaction::not_evaluated);
    CHECK(contains(e.note, "informational"));
  }
  SUBCASE("large images report a genuine miss") {
    ImageMetrics m;
    m.area = 10000;
    m.boundary_length = 100;
    m.largest_component = 1;
    BoundEntry e = theorem3_check(m, 3.0);
    CHECK(e.applicable);
    CHECK(e.satisfied == Satisfaction::no);
    CHECK_FALSE(all_applicable_satisfied({e}));
  }
}

TEST_CASE("ball radius floor") {
  SUBCASE("single cell") {
    BoundEntry e = theorem4_check(compute_metrics(BinaryImage(1, 1, {1})));
    CHECK(e.applicable);
    CHECK(e.bound.num == 0);
    CHECK(e.actual == 0);
    CHECK(e.satisfied == Satisfaction::yes);
  }
  SUBCASE("5x5 square has slack") {
    BoundEntry e = theorem4_check(compute_metrics(BinaryImage::filled(5, 5, 1)));
    CHECK(e.bound.num == 1);
    CHECK(e.actual == 2);
    CHECK(e.satisfied == Satisfaction::yes);
  }
  SUBCASE("perforated lattice meets it with equality") {
    BoundEntry e = theorem4_check(compute_metrics(build_hole_lattice(3, 2).image));
    CHECK(e.bound.num == 1);
    CHECK(e.actual == 1);
    CHECK(e.satisfied == Satisfaction::yes);
  }
  SUBCASE("empty image") {
    BoundEntry e = theorem4_check(compute_metrics(BinaryImage::filled(2, 2, 0)));
    CHECK_FALSE(e.applicable);
    CHECK_FALSE(e.actual.has_value());
    CHECK(contains(e.note, "empty"));
  }
}

TEST_CASE("ball radius floor for hole-free images") {
  SUBCASE("wide rectangle") {
    BoundEntry e = theorem5_check(compute_metrics(BinaryImage::filled(10, 5, 1)));
    CHECK(e.applicable);
    CHECK(e.bound.num == 1);  // 50 / 30
    CHECK(e.actual == 2);
    CHECK(e.satisfied == Satisfaction::yes);
  }
  SUBCASE("8x8 square") {
    BoundEntry e = theorem5_check(compute_metrics(BinaryImage::filled(8, 8, 1)));
    CHECK(e.bound.num == 2);
    CHECK(e.actual == 3);
    CHECK(e.satisfied == Satisfaction::yes);
  }
  SUBCASE("holes disable the premise") {
    BoundEntry e = theorem5_check(compute_metrics(from_rows({"###", "#.#", "###"})));
    CHECK_FALSE(e.applicable);
    CHECK(e.bound.num == 0);  // floor(8 / 16), reported for context
    CHECK(e.actual == 0);
    CHECK(contains(e.note, "holes"));
  }
  SUBCASE("empty image") {
    BoundEntry e = theorem5_check(compute_metrics(BinaryImage::filled(2, 2, 0)));
    CHECK_FALSE(e.applicable);
    CHECK(contains(e.note, "empty"));
  }
}

TEST_CASE("full report: entry order and parameter inference") {
  SUBCASE("square without hints skips the parametrised floors") {
    std::vector<BoundEntry> entries =
        full_report(compute_metrics(BinaryImage::filled(5, 5, 1)));
    std::vector<std::string> ids;
    for (const auto& e : entries) ids.push_back(e.id);
    CHECK(ids == std::vector<std::string>{
                     "lemma2", "lemma3", "lemma4.1", "lemma5.0", "lemma5.1", "lemma5.2",
                     "chain-strict.0", "chain-strict.1", "chain-strict.2", "theorem4",
                     "theorem5"});
    CHECK(all_applicable_satisfied(entries));
  }
  SUBCASE("two-piece layout infers (m, c) from shape") {
    std::vector<BoundEntry> entries =
        full_report(compute_metrics(build_theorem1_extremal(4, 1).image));
    const BoundEntry& t1 = entry_with(entries, "theorem1");
    CHECK(t1.applicable);
    CHECK(t1.bound.num == 15);
    CHECK(t1.actual == 15);
    CHECK(t1.satisfied == Satisfaction::yes);
    CHECK(contains(t1.note, "inferred"));
    CHECK(contains(t1.note, "sharp"));
    // c = 1 stays below the real-valued flavour's precondition.
    for (const auto& e : entries) CHECK(e.id != "theorem3");
  }
  SUBCASE("explicit hints carry no inference flag") {
    ImageMetrics m = compute_metrics(build_theorem1_extremal(4, 1).image);
    std::vector<BoundEntry> entries = full_report(m, BoundHints{4, 1});
    const BoundEntry& t1 = entry_with(entries, "theorem1");
    CHECK_FALSE(contains(t1.note, "inferred"));
    CHECK(contains(t1.note, "sharp"));
  }
  SUBCASE("inferred c > 1 also produces the real-valued entry") {
    std::vector<BoundEntry> entries =
        full_report(compute_metrics(build_theorem1_extremal(10, 2).image));
    std::vector<std::string> ids;
    for (const auto& e : entries) ids.push_back(e.id);
    CHECK(ids == std::vector<std::string>{
                     "lemma2", "lemma3", "lemma4.1", "lemma4.2", "lemma5.0", "lemma5.1",
                     "lemma5.2", "lemma5.3", "chain-strict.0", "chain-strict.1",
                     "chain-strict.2", "chain-strict.3", "theorem1", "theorem2", "theorem3",
                     "theorem4", "theorem5"});
    const BoundEntry& t3 = entry_with(entries, "theorem3");
    CHECK(t3.applicable);
    CHECK(t3.bound.num == 24);
    CHECK(t3.actual == 96);
    CHECK(t3.satisfied == Satisfaction::yes);
    CHECK(all_applicable_satisfied(entries));
  }
  SUBCASE("empty image still yields a complete report") {
    std::vector<BoundEntry> entries =
        full_report(compute_metrics(BinaryImage::filled(2, 2, 0)));
    std::vector<std::string> ids;
    for (const auto& e : entries) ids.push_back(e.id);
    CHECK(ids == std::vector<std::string>{"lemma2", "lemma3", "theorem4", "theorem5"});
    CHECK(all_applicable_satisfied(entries));
  }
}
