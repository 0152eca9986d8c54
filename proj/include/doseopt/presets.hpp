#pragma once

#include <optional>
#include <string>
#include <vector>

#include "doseopt/scenario.hpp"

namespace doseopt {

/// Decision regime of the reproduction tables.
///   1: alpha1 = 0.20, consider zone resolved to the low dose
///   2: alpha1 = 0.34, consider zone resolved to the high dose
struct Regime {
    int id = 1;
    double alpha1 = 0.2;
    EmpiricalConsiderPolicy consider = EmpiricalConsiderPolicy::Low;
};

Regime regime(int id);

struct PublishedValue {
    Method method = Method::Umet;
    int truth = 0;  ///< 0-based dose index
    double pct_correct = 0.0;
};

struct PresetRow {
    int scenario = 0;  ///< 1-based scenario number
    int regime = 1;
    ScenarioSpec spec;
    std::vector<PublishedValue> published;

    const PublishedValue* published_for(Method m) const;
};

struct TablePreset {
    std::string id;
    std::string title;
    int n = 0;
    bool three_endpoint = false;
    std::vector<PresetRow> rows;
};

/// Preset version; bump when any expansion changes.
inline constexpr int kPresetVersion = 1;

std::vector<std::string> preset_ids();

/// Expands a preset id (T5, T6, T7, S2, S3, S4). Throws InputError listing
/// the valid ids for anything else.
TablePreset make_preset(const std::string& id, int replications = 1000);

/// Utility table of the three-endpoint presets: base (90, 30, 60, 0),
/// offsets (10, 5, 5, 10), u14 forced to 0.
UtilityTable3 three_endpoint_utility();
CuiWeights three_endpoint_weights();

}  // namespace doseopt
