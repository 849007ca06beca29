#include "bitgrid/report.hpp"

#include <cstdio>

namespace bitgrid {

json bound_value_json(const BoundValue& value) {
  if (value.is_integer()) return value.num;
  if (value.exact) return std::to_string(value.num) + "/" + std::to_string(value.den);
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value.approx);
  return std::string(buffer);
}

json bound_entry_json(const BoundEntry& entry) {
  json e;
  e["id"] = entry.id;
  e["applicable"] = entry.applicable;
  e["bound"] = bound_value_json(entry.bound);
  e["actual"] = entry.actual.has_value() ? json(*entry.actual) : json(nullptr);
  switch (entry.satisfied) {
    case Satisfaction::yes: e["satisfied"] = true; break;
    case Satisfaction::no: e["satisfied"] = false; break;
    case Satisfaction::not_evaluated: e["satisfied"] = nullptr; break;
  }
  e["note"] = entry.note;
  return e;
}

json metrics_document(const ImageMetrics& metrics, const std::vector<BoundEntry>& bounds) {
  json doc;
  doc["width"] = metrics.width;
  doc["height"] = metrics.height;
  doc["area"] = metrics.area;
  doc["boundary_length"] = metrics.boundary_length;
  doc["component_count"] = metrics.component_count;
  doc["component_sizes"] = metrics.component_sizes;
  doc["largest_component"] = metrics.largest_component;
  doc["hole_count"] = metrics.hole_count;
  doc["hole_free"] = metrics.hole_free;
  doc["max_ball_radius"] =
      metrics.max_ball_radius.has_value() ? json(*metrics.max_ball_radius) : json(nullptr);
  doc["level_counts"] = metrics.level_counts;
  doc["iboundary_lengths"] = metrics.iboundary_lengths;
  doc["bounds"] = json::array();
  for (const auto& entry : bounds) doc["bounds"].push_back(bound_entry_json(entry));
  return doc;
}

json expected_document(const Construction& construction) {
  json doc;
  doc["kind"] = construction_kind_name(construction.kind);
  doc["parameters"] = json::object();
  for (const auto& [name, value] : construction.parameters) doc["parameters"][name] = value;
  const ExpectedMetrics& e = construction.expected;
  json expected;
  expected["width"] = e.width;
  expected["height"] = e.height;
  expected["area"] = e.area;
  expected["boundary_length"] = e.boundary_length;
  expected["component_count"] = e.component_count;
  expected["component_sizes"] = e.component_sizes;
  expected["largest_component"] = e.largest_component;
  expected["hole_count"] = e.hole_count;
  expected["hole_free"] = e.hole_free;
  expected["max_ball_radius"] =
      e.max_ball_radius.has_value() ? json(*e.max_ball_radius) : json(nullptr);
  doc["expected"] = std::move(expected);
  return doc;
}

json sweep_document(const SweepReport& report) {
  json doc;
  doc["grid_width"] = report.grid_width;
  doc["grid_height"] = report.grid_height;
  doc["images_checked"] = report.images_checked;
  doc["violations"] = json::array();
  for (const auto& violation : report.violations) {
    json v;
    v["image_code"] = violation.image_code;
    v["check_id"] = violation.check_id;
    v["detail"] = violation.detail;
    doc["violations"].push_back(std::move(v));
  }
  return doc;
}

VerifySummary summarize(const std::vector<BoundEntry>& entries) {
  VerifySummary summary;
  for (const auto& entry : entries) {
    if (entry.applicable && entry.satisfied != Satisfaction::yes) {
      summary.all_satisfied = false;
      summary.failing_ids.push_back(entry.id);
    }
  }
  return summary;
}

json verify_document(const std::vector<BoundEntry>& entries) {
  VerifySummary summary = summarize(entries);
  json doc;
  doc["verdict"] = summary.all_satisfied ? "pass" : "fail";
  doc["failures"] = summary.failing_ids;
  doc["bounds"] = json::array();
  for (const auto& entry : entries) doc["bounds"].push_back(bound_entry_json(entry));
  return doc;
}

}  // namespace bitgrid
