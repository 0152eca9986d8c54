#pragma once

#include <optional>
#include <vector>

#include "doseopt/scenario.hpp"

namespace doseopt {

/// Arms carrying the expected counts n * p of every cell under endpoint
/// independence.
std::vector<ArmData> expected_arms(const ScenarioSpec& spec);

/// True standardized metric of each dose (utility / 100 or CUI).
std::vector<double> true_metric(const ScenarioSpec& spec, Method m);

/// Empirical sequential scan on the true rates; nullopt when the consider
/// policy leaves the decision pending.
std::optional<int> truth_empirical(const ScenarioSpec& spec);

/// Utility truth for U-MET-m or CUI-MET per spec.truth_rule.
std::optional<int> truth_utility(const ScenarioSpec& spec, Method m);

enum class DifferenceClass { Difference, Borderline, None };

struct BinomialComparison {
    int high = 0;
    int low = 0;
    double efficacy_p = 1.0;  ///< one-sided p-value, high more efficacious
    double toxicity_p = 1.0;  ///< one-sided p-value, high more toxic
    DifferenceClass efficacy = DifferenceClass::None;
    DifferenceClass toxicity = DifferenceClass::None;
    bool high_selected = false;
};

struct BinomialTruth {
    std::optional<int> top_dose;
    std::vector<BinomialComparison> steps;
    std::optional<int> selected;
};

/// One-sided two-proportion z-test with continuity correction on the
/// expected counts of two arms of size n: p-value of rate_high > rate_low.
double two_proportion_p_value(double rate_high, double rate_low, int n);

/// Classes at the fixed levels 0.2 (difference) and 0.34 (borderline).
DifferenceClass classify_difference(double p_value);

/// Shared truth: d* by true U-MET-m ranking, then the sequential scan where
/// the high dose wins iff its efficacy gain is significant at alpha.
BinomialTruth truth_binomial_test(const ScenarioSpec& spec, double alpha);

/// Truth of a method under the scenario's truth mode.
std::optional<int> truth_for(const ScenarioSpec& spec, Method m);

const char* to_string(DifferenceClass c);

}  // namespace doseopt
