#pragma once

#include <optional>
#include <string>
#include <vector>

#include "doseopt/decision.hpp"
#include "doseopt/empirical.hpp"
#include "doseopt/sampler.hpp"
#include "doseopt/utility.hpp"

namespace doseopt {

enum class Method { Empirical, Umet, Cui };

/// Which truth each method's selections are scored against.
enum class TruthMode {
    BinomialTest,  ///< one shared truth from a two-proportion test
    PerMethod,     ///< each method against its own plug-in truth
};

enum class UtilityTruthRule {
    /// Posterior test run on expected counts n * p, with the truth margin
    /// as delta.
    ExpectedPosterior,
    /// Select high iff true metric(high) - true metric(low) > delta.
    PlugIn,
};

struct ScenarioSpec {
    std::string id;
    std::vector<MarginalRates> doses;  ///< true rates, ascending dose level
    Correlations correlations;
    int n = 30;
    int replications = 1000;

    std::optional<UtilityTable2> utility2;
    std::optional<UtilityTable3> utility3;
    std::optional<CuiWeights> cui;  ///< CUI-MET runs only when set

    DecisionConfig decision;
    AdmissibilityConfig admissibility;
    EmpiricalThresholds empirical;

    TruthMode truth_mode = TruthMode::PerMethod;
    UtilityTruthRule truth_rule = UtilityTruthRule::ExpectedPosterior;
    /// Margin of the utility truth on the standardized scale.
    double truth_delta = 0.0075;
    /// Significance level of the efficacy test in BinomialTest mode.
    double binomial_alpha = 0.2;
    /// Whether a toxicity difference at the stricter level vetoes the high
    /// dose in the binomial truth (off: classified and reported only).
    bool binomial_tox_gate = false;

    bool three_endpoint() const { return !doses.empty() && doses.front().biomarker.has_value(); }
    std::vector<Method> methods() const;
    MetricModel model(Method m) const;
    void validate() const;
};

const char* to_string(Method m);
const char* method_label(Method m);  ///< display name
const char* to_string(TruthMode m);

}  // namespace doseopt
