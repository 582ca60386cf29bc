#pragma once

#include "monpure/monoid_io.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace monpure {

/// One line of a report document.
struct ReportField {
  std::string field;
  std::string provenance;  // exact | estimate(...) | undecided | info
  nlohmann::ordered_json value;

  bool operator==(const ReportField& o) const {
    return field == o.field && provenance == o.provenance && value == o.value;
  }
};

/// JSON-lines document: a schema header followed by one field per line.
/// Rationals travel as "p/q" strings; serialization is byte-deterministic
/// except for the timing line.
struct ReportDocument {
  std::string schema_version = "1";
  std::string name;
  std::vector<ReportField> fields;

  const ReportField* find(const std::string& field) const;
  bool operator==(const ReportDocument& o) const {
    return schema_version == o.schema_version && name == o.name && fields == o.fields;
  }
};

std::string serialize_report(const ReportDocument& doc);
ReportDocument parse_report(const std::string& text);

enum class ReportVerb { Check, Vm, Mpt, Face, Ratio, Full };

struct RunOptions {
  ReportVerb verb = ReportVerb::Full;
  Int vm_m = 3;            // m for the Vm verb
  bool with_timing = true;
};

struct RunResult {
  ReportDocument doc;
  bool has_estimates = false;
  bool has_undecided = false;
};

RunResult run_report(const MonoidFile& file, const RunOptions& options = {});
RunResult run_report(PurityEngine& engine, const std::string& name,
                     const RunOptions& options = {});

}  // namespace monpure
