#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "doseopt/beta_inference.hpp"
#include "doseopt/utility.hpp"

namespace doseopt {

enum class Metric { Umet, Cui };
enum class Strategy { Sequential, Pairwise };
enum class ConsiderPolicy { TreatAsLow, TreatAsHigh, Report };
enum class Ranking { PosteriorMean, Observed };
enum class Zone { SelectHigh, SelectLow, ConsiderHigh };

struct AdmissibilityConfig {
    double phi_t = 0.35;  ///< toxicity upper limit
    double phi_e = 0.22;  ///< efficacy lower limit
    double c_t = 0.95;
    double c_e = 0.90;
    /// Optional third-endpoint futility rule, off unless both are set.
    std::optional<double> phi_b;
    std::optional<double> c_b;
    BetaParams prior{1.0, 1.0};

    void validate() const;
};

struct DecisionConfig {
    double delta = 0.0;
    double alpha1 = 0.2;
    double alpha2 = 0.34;
    Strategy strategy = Strategy::Sequential;
    ConsiderPolicy consider_policy = ConsiderPolicy::TreatAsLow;
    Metric metric = Metric::Umet;
    Ranking ranking = Ranking::PosteriorMean;
    BetaParams prior{1.0, 1.0};

    double c1() const { return 1.0 - alpha1; }
    double c2() const { return 1.0 - alpha2; }
    void validate() const;
};

/// The scoring model of a metric: which table or weights turn arm data into
/// quasi-events.
struct MetricModel {
    Metric metric = Metric::Umet;
    std::optional<UtilityTable2> utility2;
    std::optional<UtilityTable3> utility3;
    std::optional<CuiWeights> weights;

    static MetricModel umet(const UtilityTable2& u) { return {Metric::Umet, u, {}, {}}; }
    static MetricModel umet(const UtilityTable3& u) { return {Metric::Umet, {}, u, {}}; }
    static MetricModel cui(const CuiWeights& w) { return {Metric::Cui, {}, {}, w}; }

    double quasi_events(const ArmData& arm) const;
    void validate() const;
};

/// Probability backend for Pr(high - low > delta); defaults to
/// prob_diff_greater. The simulator plugs in a memoizing wrapper.
using ProbabilityFn = std::function<double(const PosteriorPair&, double)>;

struct AdmissibilityVerdict {
    int dose = 0;  ///< 0-based index into the arm list
    double p_toxic = 0.0;   ///< Pr(p_T > phi_T | data)
    double p_futile = 0.0;  ///< Pr(p_E < phi_E | data)
    std::optional<double> p_biomarker_futile;
    bool toxic = false;
    bool futile = false;
    bool biomarker_futile = false;

    bool admissible() const { return !toxic && !futile && !biomarker_futile; }
};

struct Decision {
    Zone zone = Zone::SelectLow;
    double probability = 0.0;
    PosteriorPair posteriors;
    double observed_difference = 0.0;  ///< (x_h - x_l) / n on the 0-100 scale
};

/// One high-vs-low comparison as it appears in a trace.
struct ComparisonRecord {
    int high = 0;
    int low = 0;
    Decision decision;
    std::string action;
};

struct SelectionTrace {
    std::vector<AdmissibilityVerdict> admissibility;
    std::vector<double> desirability;  ///< per dose, NaN when inadmissible
    std::optional<int> top_dose;       ///< d*
    std::vector<int> removed;          ///< higher levels ranked below d*
    std::vector<int> skipped;          ///< inadmissible doses below d*
    std::vector<ComparisonRecord> steps;
    std::optional<int> selected;
    std::vector<std::string> notes;
};

struct PairwiseResult {
    std::vector<AdmissibilityVerdict> admissibility;
    std::optional<int> top_dose;
    std::vector<ComparisonRecord> pairs;  ///< every admissible (high > low) pair
    std::optional<int> recommended;
    /// Set when the recommendation hinges on an unresolved consider zone.
    std::optional<ComparisonRecord> pending;
    std::vector<std::string> notes;
};

Zone zone_of(double probability, const DecisionConfig& cfg);
const char* zone_letter(Zone z);
const char* to_string(Zone z);
const char* to_string(Metric m);
const char* to_string(Strategy s);
const char* to_string(ConsiderPolicy p);
const char* to_string(Ranking r);

/// Marginal posterior Beta(prior.a + count, prior.b + n - count).
BetaParams marginal_posterior(double count, int n, const BetaParams& prior);

bool is_toxic(const ArmData& arm, const AdmissibilityConfig& cfg);
bool is_futile(const ArmData& arm, const AdmissibilityConfig& cfg);
AdmissibilityVerdict assess_admissibility(const ArmData& arm, int dose,
                                          const AdmissibilityConfig& cfg);
/// Per-dose verdicts; indices of admissible arms are those with admissible().
std::vector<AdmissibilityVerdict> admissible_set(const std::vector<ArmData>& arms,
                                                 const AdmissibilityConfig& cfg);

Decision pairwise_decision(const ArmData& high, const ArmData& low, const MetricModel& model,
                           const DecisionConfig& cfg, const ProbabilityFn& prob = {});

/// Candidate indices ordered by decreasing desirability, ties toward the
/// lower dose level.
std::vector<int> rank_by_desirability(const std::vector<ArmData>& arms,
                                      const std::vector<int>& candidates,
                                      const MetricModel& model, const DecisionConfig& cfg);
double desirability(const ArmData& arm, const MetricModel& model, const DecisionConfig& cfg);

SelectionTrace sequential_select(const std::vector<ArmData>& arms, const MetricModel& model,
                                 const DecisionConfig& cfg, const AdmissibilityConfig& adm,
                                 const ProbabilityFn& prob = {});

PairwiseResult pairwise_matrix(const std::vector<ArmData>& arms, const MetricModel& model,
                               const DecisionConfig& cfg, const AdmissibilityConfig& adm,
                               const ProbabilityFn& prob = {});

}  // namespace doseopt
