#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "doseopt/presets.hpp"
#include "doseopt/scenario.hpp"

namespace doseopt {

/// Schema violation in an input document; `field` is a JSON path such as
/// doses[1].n.
struct SchemaError : InputError {
    SchemaError(const std::string& field, const std::string& what);
    std::string field;
};

struct DoseRecord {
    std::string label;
    int level = 0;
    std::optional<MarginalRates> stated_rates;  ///< when given as rates with n
};

struct TrialInputDocument {
    std::string title;
    Reconstruction reconstruction = Reconstruction::Expected;
    std::vector<DoseRecord> doses;  ///< ascending level
    std::vector<ArmData> arms;      ///< parallel to doses
    std::optional<UtilityTable2> utility2;
    std::optional<UtilityTable3> utility3;
    std::optional<CuiWeights> cui;
    DecisionConfig decision;
    AdmissibilityConfig admissibility;
    EmpiricalThresholds empirical;

    bool has(Method m) const;
    MetricModel model(Method m) const;
};

TrialInputDocument parse_trial_input(const nlohmann::json& j);
TrialInputDocument load_trial_input(const std::filesystem::path& path);
nlohmann::json to_json(const TrialInputDocument& doc);

struct ScenarioSuiteDocument {
    std::vector<std::string> presets;
    std::vector<ScenarioSpec> scenarios;
};

ScenarioSuiteDocument parse_suite(const nlohmann::json& j);
ScenarioSuiteDocument load_suite(const std::filesystem::path& path);

/// Parses text as JSON, turning syntax errors into SchemaError with the
/// line and column.
nlohmann::json parse_json_text(const std::string& text, const std::string& source);

// Enum spellings shared by documents and reports.
Strategy parse_strategy(const std::string& s);
ConsiderPolicy parse_consider_policy(const std::string& s);
Method parse_method(const std::string& s);
const char* to_string(Reconstruction r);

nlohmann::json to_json(const DecisionConfig& c);
nlohmann::json to_json(const AdmissibilityConfig& c);
nlohmann::json to_json(const EmpiricalThresholds& t);

}  // namespace doseopt
