#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "germ/classify/classify.hpp"
#include "germ/cli/germ_file.hpp"

namespace germ {

nlohmann::json to_json(const NumericConfig& cfg);
nlohmann::json to_json(const NumericCertificate& cert);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const VerdictReport& r);
std::string render_text(const VerdictReport& r);

/// Verdict tokens by field name ("image_germ", "fibration.tube", ...).
std::vector<std::pair<std::string, const Verdict*>> verdict_fields(const VerdictReport& r);

struct FixtureResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> mismatches;
  double seconds = 0;
  std::optional<VerdictReport> report;
};

/// Analyzes a fixture with automatic numeric stages and compares the
/// report against its expectations and the report invariants.
FixtureResult run_fixture(const GermSpec& spec, AnalyzeOptions opts);

}  // namespace germ
