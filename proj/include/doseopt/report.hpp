#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "doseopt/document.hpp"
#include "doseopt/presets.hpp"
#include "doseopt/simulation.hpp"

namespace doseopt {

/// Result of one method on a trial input.
struct MethodRun {
    Method method = Method::Umet;
    Strategy strategy = Strategy::Sequential;
    std::optional<SelectionTrace> sequential;  ///< utility methods, sequential
    std::optional<PairwiseResult> pairwise;    ///< utility methods, pairwise
    std::optional<EmpiricalTrace> empirical;   ///< empirical scan (always run for Empirical)
    std::vector<EmpiricalStep> empirical_pairs;  ///< empirical matrix, pairwise strategy only
    std::optional<int> selected;
    bool pending = false;  ///< an unresolved consider zone blocks the choice
};

struct DecisionReport {
    TrialInputDocument input;
    Strategy strategy = Strategy::Sequential;
    std::vector<MethodRun> runs;

    /// True when every requested method selected a dose.
    bool all_selected() const;
};

/// Methods a --method flag expands to; "all" keeps those the document
/// configures. Throws InputError for a method the document cannot run.
std::vector<Method> requested_methods(const TrialInputDocument& doc, const std::string& flag);

DecisionReport run_decide(const TrialInputDocument& doc, const std::vector<Method>& methods, Strategy strategy);

/// Human-readable trace: probabilities at 3 decimals, utilities at 1.
std::string render_trace(const DecisionReport& report);

/// Machine-readable record of the full state, full precision.
nlohmann::json to_json(const DecisionReport& report);

inline constexpr int kReportVersion = 1;

/// What a decision record asserts, recovered from its JSON.
struct RecordedRun {
    Method method = Method::Umet;
    Strategy strategy = Strategy::Sequential;
    std::optional<int> selected;
    bool pending = false;
    std::vector<double> step_probabilities;  ///< utility methods; empty otherwise
};

struct RecordedReport {
    TrialInputDocument input;
    std::vector<RecordedRun> runs;
};

/// Validates a decision record against the report schema, including the
/// embedded input document. Throws SchemaError naming the offending field.
RecordedReport parse_decision_report(const nlohmann::json& j);

// CSV writers. Probabilities use 6-decimal fixed point.

/// Columns: scenario, method, truth_mode, replications, true_dose, p_correct,
/// se_correct, p_none, p_dose_1 .. p_dose_K, with K the largest dose count
/// in the run; shorter scenarios leave the trailing cells empty.
void write_oc_csv(std::ostream& out, const std::vector<OCReport>& reports, const std::vector<ScenarioSpec>& specs);

struct TableCell {
    const PresetRow* row = nullptr;
    const MethodOC* oc = nullptr;
    const PublishedValue* published = nullptr;
};

/// Simulates every row of a preset. Row r uses scenario index = its
/// scenario number, so both regimes of a scenario share random numbers.
std::vector<OCReport> simulate_preset(const TablePreset& preset, std::uint64_t seed, int workers);

/// Columns: preset, scenario, regime, method, true_dose, published_true_dose,
/// truth_match, pct_correct, published_pct_correct, delta_pct, se_pct.
void write_tables_csv(std::ostream& out, const TablePreset& preset, const std::vector<OCReport>& reports);

/// Side-by-side text rendering of the same content.
std::string render_table(const TablePreset& preset, const std::vector<OCReport>& reports);

/// Six-decimal fixed point, the format of every CSV number.
std::string fixed6(double v);

}  // namespace doseopt
