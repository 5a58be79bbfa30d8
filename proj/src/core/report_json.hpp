#pragma once

#include <json.hpp>

#include "checker.hpp"
#include "theorems.hpp"

namespace ringlab {

constexpr int kCertificateSchemaVersion = 1;
constexpr const char* kToolVersion = "0.1.0";

using ordered_json = nlohmann::ordered_json;

// Self-contained classification certificate: witness coefficients are stored
// as element labels so the document replays from the expression alone.
// Deterministic field set: no timings, and pairs_examined is canonical.
ordered_json classification_json(const ClassificationReport& report,
                                 const FiniteRing& ring);

// Rebuilds a report from a certificate document against the given ring.
// Unknown fields are ignored; unresolvable labels or missing required fields
// raise malformed_witness.
ClassificationReport classification_from_json(const ordered_json& doc,
                                              const FiniteRing& ring);

ordered_json theorem_run_json(const TheoremRun& run);

ordered_json example_suite_json(const ExampleSuiteReport& report);

ordered_json element_set_json(const ElementSet& set);

}  // namespace ringlab
