#pragma once

// JSON input/output: model-spec documents in, invariant/check report
// documents out. Rationals travel as canonical "p/q" strings (floats are
// renderings, never the source of truth), so documents round-trip lossless.

#include "lctlab/bounds.hpp"
#include "lctlab/model.hpp"

#include <json.hpp>

#include <string>

namespace lctlab::io {

using json = nlohmann::ordered_json;

// {"model": {"type": "weighted"|"monomial"|"truncated", ...}}. Rationals may
// be "p/q" strings or plain JSON integers. Throws SchemaError on shape
// problems, ValidationError on mathematically invalid models.
SingularityModel parse_model(const json& doc);
SingularityModel parse_model_text(const std::string& text);

json model_to_json(const SingularityModel& m);

json table_to_json(const InvariantTable& t);
InvariantTable table_from_json(const json& j);

json check_to_json(const bounds::CheckResult& c);
bounds::CheckResult check_from_json(const json& j);

struct ReportDocument {
  json model;
  InvariantTable table;
  std::vector<bounds::CheckResult> checks;
  std::optional<bounds::NumericCrossCheck> numeric;
  bool all_exact_hold = false;
  std::string version;
};

json report_to_json(const ReportDocument& doc);
ReportDocument report_from_json(const json& j);

ReportDocument make_report_document(const SingularityModel& m, const bounds::CheckReport& rep);

// Document for the invariants command (no checks).
json invariants_document(const SingularityModel& m, const InvariantTable& t);

}  // namespace lctlab::io
