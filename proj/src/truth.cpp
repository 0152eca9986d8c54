#include "doseopt/truth.hpp"

#include <algorithm>
#include <cmath>

#include "doseopt/special.hpp"

namespace doseopt {

namespace {

constexpr double kDifferenceLevel = 0.2;
constexpr double kBorderlineLevel = 0.34;

std::vector<int> admissible_indices(const std::vector<ArmData>& arms, const AdmissibilityConfig& adm) {
    std::vector<int> out;
    for (const auto& v : admissible_set(arms, adm))
        if (v.admissible()) out.push_back(v.dose);
    return out;
}

// Highest value wins, ties toward the lower dose level.
int argmax_lowest(const std::vector<double>& values, const std::vector<int>& candidates) {
    int best = candidates.front();
    for (int d : candidates)
        if (values[d] > values[best]) best = d;
    return best;
}

}  // namespace

std::vector<ArmData> expected_arms(const ScenarioSpec& spec) {
    std::vector<ArmData> arms;
    arms.reserve(spec.doses.size());
    for (std::size_t d = 0; d < spec.doses.size(); ++d)
        arms.push_back(arm_from_rates("dose " + std::to_string(d + 1), spec.n, spec.doses[d],
                                      Reconstruction::Expected));
    return arms;
}

std::vector<double> true_metric(const ScenarioSpec& spec, Method m) {
    std::vector<double> out;
    for (const auto& r : spec.doses) {
        if (m == Method::Cui) {
            out.push_back(cui_value(r, *spec.cui));
        } else if (spec.utility3) {
            out.push_back(mean_utility_joint3(independent_joint3(r.toxicity, r.efficacy, *r.biomarker),
                                              *spec.utility3) / 100.0);
        } else {
            out.push_back(mean_utility_joint2(independent_joint2(r.toxicity, r.efficacy), *spec.utility2) / 100.0);
        }
    }
    return out;
}

std::optional<int> truth_empirical(const ScenarioSpec& spec) {
    std::vector<AdmissibilityVerdict> verdicts;
    if (spec.empirical.screen_admissibility) verdicts = admissible_set(expected_arms(spec), spec.admissibility);
    return empirical_sequential(spec.doses, spec.empirical, verdicts).selected;
}

std::optional<int> truth_utility(const ScenarioSpec& spec, Method m) {
    const auto arms = expected_arms(spec);
    if (spec.truth_rule == UtilityTruthRule::ExpectedPosterior) {
        DecisionConfig cfg = spec.decision;
        cfg.delta = spec.truth_delta;
        return sequential_select(arms, spec.model(m), cfg, spec.admissibility).selected;
    }
    const auto candidates = admissible_indices(arms, spec.admissibility);
    if (candidates.empty()) return std::nullopt;
    const auto value = true_metric(spec, m);
    const int top = argmax_lowest(value, candidates);
    for (int low : candidates) {
        if (low >= top) break;
        if (!(value[top] - value[low] > spec.decision.delta)) return low;
    }
    return top;
}

double two_proportion_p_value(double rate_high, double rate_low, int n) {
    if (n < 1) throw InputError("two-proportion test needs n >= 1");
    const double pooled = 0.5 * (rate_high + rate_low);
    const double var = pooled * (1.0 - pooled) * 2.0 / n;
    const double diff = rate_high - rate_low - 1.0 / n;
    if (var <= 0.0) return diff > 0.0 ? 0.0 : 1.0;
    return 1.0 - norm_cdf(diff / std::sqrt(var));
}

DifferenceClass classify_difference(double p) {
    if (p < kDifferenceLevel) return DifferenceClass::Difference;
    if (p < kBorderlineLevel) return DifferenceClass::Borderline;
    return DifferenceClass::None;
}

BinomialTruth truth_binomial_test(const ScenarioSpec& spec, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must lie in (0, 1)");
    BinomialTruth out;
    const auto arms = expected_arms(spec);
    const auto candidates = admissible_indices(arms, spec.admissibility);
    if (candidates.empty()) return out;
    const int top = argmax_lowest(true_metric(spec, Method::Umet), candidates);
    out.top_dose = top;
    for (int low : candidates) {
        if (low >= top) break;
        BinomialComparison c;
        c.high = top;
        c.low = low;
        const auto& h = spec.doses[top];
        const auto& l = spec.doses[low];
        c.efficacy_p = two_proportion_p_value(h.efficacy, l.efficacy, spec.n);
        c.toxicity_p = two_proportion_p_value(h.toxicity, l.toxicity, spec.n);
        c.efficacy = classify_difference(c.efficacy_p);
        c.toxicity = classify_difference(c.toxicity_p);
        c.high_selected = c.efficacy_p < alpha;
        if (spec.binomial_tox_gate && c.toxicity == DifferenceClass::Difference) c.high_selected = false;
        out.steps.push_back(c);
        if (!c.high_selected) {
            out.selected = low;
            return out;
        }
    }
    out.selected = top;
    return out;
}

std::optional<int> truth_for(const ScenarioSpec& spec, Method m) {
    if (spec.truth_mode == TruthMode::BinomialTest) return truth_binomial_test(spec, spec.binomial_alpha).selected;
    if (m == Method::Empirical) return truth_empirical(spec);
    return truth_utility(spec, m);
}

const char* to_string(DifferenceClass c) {
    switch (c) {
        case DifferenceClass::Difference: return "diff";
        case DifferenceClass::Borderline: return "borderline";
        case DifferenceClass::None: return "no-diff";
    }
    return "?";
}

}  // namespace doseopt
