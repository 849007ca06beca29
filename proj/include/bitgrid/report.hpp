#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "bitgrid/bounds.hpp"
#include "bitgrid/constructions.hpp"
#include "bitgrid/oracle.hpp"

namespace bitgrid {

// All documents use ordered JSON so serialization is byte-stable.
using json = nlohmann::ordered_json;

// Integer bounds serialize as JSON numbers; non-integer rationals as
// "num/den" strings; floating approximations as fixed 6-decimal strings.
json bound_value_json(const BoundValue& value);

// {id, applicable, bound, actual, satisfied, note} — keys always present;
// actual and satisfied are null when not evaluated.
json bound_entry_json(const BoundEntry& entry);

// Full analyze document: metrics keys in fixed order, then the bounds list.
json metrics_document(const ImageMetrics& metrics, const std::vector<BoundEntry>& bounds);

// Generate document: construction kind, parameters, closed-form expectations.
json expected_document(const Construction& construction);

// Sweep document mirroring SweepReport.
json sweep_document(const SweepReport& report);

struct VerifySummary {
  bool all_satisfied = true;
  std::vector<std::string> failing_ids;
};

VerifySummary summarize(const std::vector<BoundEntry>& entries);

// Verify document: verdict, failing entry ids, full bounds list.
json verify_document(const std::vector<BoundEntry>& entries);

}  // namespace bitgrid
