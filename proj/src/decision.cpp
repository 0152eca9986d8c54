#include "doseopt/decision.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace doseopt {

namespace {

void check_open_unit(double v, const char* name) {
    if (!(v > 0.0 && v < 1.0)) {
        std::ostringstream os;
        os << name << " = " << v << " must lie in (0, 1)";
        throw InputError(os.str());
    }
}

double require_count(const std::optional<double>& c, const ArmData& arm, const char* what) {
    if (!c) throw InputError("arm '" + arm.label + "': " + what + " count required");
    return *c;
}

std::string dose_name(int index) { return "dose " + std::to_string(index + 1); }

}  // namespace

void AdmissibilityConfig::validate() const {
    check_open_unit(phi_t, "phi_T");
    check_open_unit(phi_e, "phi_E");
    check_open_unit(c_t, "c_T");
    check_open_unit(c_e, "c_E");
    if (phi_b.has_value() != c_b.has_value())
        throw InputError("biomarker admissibility needs both phi_B and c_B");
    if (phi_b) {
        check_open_unit(*phi_b, "phi_B");
        check_open_unit(*c_b, "c_B");
    }
    prior.validate();
}

void DecisionConfig::validate() const {
    if (!(delta >= -1.0 && delta <= 1.0)) throw InputError("delta must lie in [-1, 1]");
    check_open_unit(alpha1, "alpha1");
    check_open_unit(alpha2, "alpha2");
    if (!(c2() < c1())) throw InputError("cutoffs require C2 < C1, i.e. alpha1 < alpha2");
    prior.validate();
}

void MetricModel::validate() const {
    if (metric == Metric::Umet) {
        if (utility2.has_value() == utility3.has_value())
            throw InputError("U-MET-m needs exactly one utility table");
        if (utility2) utility2->validate();
        if (utility3) utility3->validate();
    } else {
        if (!weights) throw InputError("CUI-MET needs endpoint weights");
        weights->validate();
    }
}

double MetricModel::quasi_events(const ArmData& arm) const {
    if (metric == Metric::Cui) return cui_quasi_events(arm, *weights);
    if (utility3) return quasi_events3(arm, *utility3);
    return quasi_events2(arm, *utility2);
}

Zone zone_of(double p, const DecisionConfig& cfg) {
    if (p > cfg.c1()) return Zone::SelectHigh;
    if (p < cfg.c2()) return Zone::SelectLow;
    return Zone::ConsiderHigh;
}

const char* zone_letter(Zone z) {
    switch (z) {
        case Zone::SelectHigh: return "H";
        case Zone::SelectLow: return "L";
        case Zone::ConsiderHigh: return "C";
    }
    return "?";
}

const char* to_string(Zone z) {
    switch (z) {
        case Zone::SelectHigh: return "select-high";
        case Zone::SelectLow: return "select-low";
        case Zone::ConsiderHigh: return "consider-high";
    }
    return "?";
}

const char* to_string(Metric m) { return m == Metric::Umet ? "umet" : "cui"; }
const char* to_string(Strategy s) { return s == Strategy::Sequential ? "sequential" : "pairwise"; }

const char* to_string(ConsiderPolicy p) {
    switch (p) {
        case ConsiderPolicy::TreatAsLow: return "treat-as-low";
        case ConsiderPolicy::TreatAsHigh: return "treat-as-high";
        case ConsiderPolicy::Report: return "report-consider";
    }
    return "?";
}

const char* to_string(Ranking r) { return r == Ranking::PosteriorMean ? "posterior-mean" : "observed"; }

BetaParams marginal_posterior(double count, int n, const BetaParams& prior) {
    return beta_posterior(prior, count, static_cast<double>(n));
}

bool is_toxic(const ArmData& arm, const AdmissibilityConfig& cfg) {
    return assess_admissibility(arm, 0, cfg).toxic;
}

bool is_futile(const ArmData& arm, const AdmissibilityConfig& cfg) {
    return assess_admissibility(arm, 0, cfg).futile;
}

AdmissibilityVerdict assess_admissibility(const ArmData& arm, int dose, const AdmissibilityConfig& cfg) {
    AdmissibilityVerdict v;
    v.dose = dose;
    const double tox = require_count(arm.toxicity_count(), arm, "toxicity");
    const double eff = require_count(arm.efficacy_count(), arm, "efficacy");
    v.p_toxic = tail_prob_greater(marginal_posterior(tox, arm.n, cfg.prior), cfg.phi_t);
    v.p_futile = beta_cdf(marginal_posterior(eff, arm.n, cfg.prior), cfg.phi_e);
    v.toxic = v.p_toxic > cfg.c_t;
    v.futile = v.p_futile > cfg.c_e;
    if (cfg.phi_b) {
        const double bio = require_count(arm.biomarker_count(), arm, "biomarker");
        v.p_biomarker_futile = beta_cdf(marginal_posterior(bio, arm.n, cfg.prior), *cfg.phi_b);
        v.biomarker_futile = *v.p_biomarker_futile > *cfg.c_b;
    }
    return v;
}

std::vector<AdmissibilityVerdict> admissible_set(const std::vector<ArmData>& arms,
                                                 const AdmissibilityConfig& cfg) {
    std::vector<AdmissibilityVerdict> out;
    out.reserve(arms.size());
    for (std::size_t d = 0; d < arms.size(); ++d)
        out.push_back(assess_admissibility(arms[d], static_cast<int>(d), cfg));
    return out;
}

Decision pairwise_decision(const ArmData& high, const ArmData& low, const MetricModel& model,
                           const DecisionConfig& cfg, const ProbabilityFn& prob) {
    const double xh = model.quasi_events(high);
    const double xl = model.quasi_events(low);
    Decision d;
    d.posteriors.high = beta_posterior(cfg.prior, xh, high.n);
    d.posteriors.low = beta_posterior(cfg.prior, xl, low.n);
    const double sh = high.n > 0 ? xh / high.n : 0.0;
    const double sl = low.n > 0 ? xl / low.n : 0.0;
    d.observed_difference = 100.0 * (sh - sl);
    d.probability = prob ? prob(d.posteriors, cfg.delta) : prob_diff_greater(d.posteriors, cfg.delta);
    d.zone = zone_of(d.probability, cfg);
    return d;
}

double desirability(const ArmData& arm, const MetricModel& model, const DecisionConfig& cfg) {
    const double x = model.quasi_events(arm);
    if (cfg.ranking == Ranking::Observed) return arm.n > 0 ? x / arm.n : 0.0;
    return beta_posterior(cfg.prior, x, arm.n).mean();
}

std::vector<int> rank_by_desirability(const std::vector<ArmData>& arms, const std::vector<int>& candidates,
                                      const MetricModel& model, const DecisionConfig& cfg) {
    std::vector<std::pair<double, int>> scored;
    scored.reserve(candidates.size());
    for (int d : candidates) scored.emplace_back(desirability(arms.at(d), model, cfg), d);
    std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<int> out;
    out.reserve(scored.size());
    for (const auto& s : scored) out.push_back(s.second);
    return out;
}

namespace {

// Verdicts, admissible indices, desirability and d* shared by both strategies.
struct Screen {
    std::vector<AdmissibilityVerdict> verdicts;
    std::vector<int> admissible;
    std::vector<double> desirability;
    std::optional<int> top;
};

Screen screen(const std::vector<ArmData>& arms, const MetricModel& model, const DecisionConfig& cfg,
              const AdmissibilityConfig& adm) {
    if (arms.empty()) throw InputError("at least one dose arm is required");
    model.validate();
    cfg.validate();
    adm.validate();
    for (const auto& a : arms) a.validate();
    Screen s;
    s.verdicts = admissible_set(arms, adm);
    s.desirability.assign(arms.size(), std::numeric_limits<double>::quiet_NaN());
    for (const auto& v : s.verdicts)
        if (v.admissible()) s.admissible.push_back(v.dose);
    for (int d : s.admissible) s.desirability[d] = desirability(arms[d], model, cfg);
    if (!s.admissible.empty()) s.top = rank_by_desirability(arms, s.admissible, model, cfg).front();
    return s;
}

}  // namespace

SelectionTrace sequential_select(const std::vector<ArmData>& arms, const MetricModel& model,
                                 const DecisionConfig& cfg, const AdmissibilityConfig& adm,
                                 const ProbabilityFn& prob) {
    Screen s = screen(arms, model, cfg, adm);
    SelectionTrace t;
    t.admissibility = s.verdicts;
    t.desirability = s.desirability;
    if (!s.top) {
        t.notes.emplace_back("no admissible dose; no dose selectable");
        return t;
    }
    const int top = *s.top;
    t.top_dose = top;
    for (const auto& v : s.verdicts) {
        if (v.admissible() && v.dose > top) {
            t.removed.push_back(v.dose);
            t.notes.push_back(dose_name(v.dose) + " ranked below " + dose_name(top) +
                              "; removed from comparison");
        } else if (!v.admissible() && v.dose < top) {
            t.skipped.push_back(v.dose);
            t.notes.push_back(dose_name(v.dose) + " inadmissible; skipped");
        }
    }
    // Without a consider zone: high iff p > C1, otherwise the lower dose.
    for (int low : s.admissible) {
        if (low >= top) break;
        ComparisonRecord rec{top, low, pairwise_decision(arms[top], arms[low], model, cfg, prob), {}};
        rec.decision.zone = rec.decision.probability > cfg.c1() ? Zone::SelectHigh : Zone::SelectLow;
        const bool high = rec.decision.zone == Zone::SelectHigh;
        rec.action = high ? "continue" : "select " + dose_name(low);
        t.steps.push_back(rec);
        if (!high) {
            t.selected = low;
            return t;
        }
    }
    t.selected = top;
    return t;
}

PairwiseResult pairwise_matrix(const std::vector<ArmData>& arms, const MetricModel& model,
                               const DecisionConfig& cfg, const AdmissibilityConfig& adm,
                               const ProbabilityFn& prob) {
    Screen s = screen(arms, model, cfg, adm);
    PairwiseResult r;
    r.admissibility = s.verdicts;
    if (s.admissible.size() < 2) {
        if (s.admissible.empty()) {
            r.notes.emplace_back("no admissible dose; no dose selectable");
        } else {
            r.top_dose = s.top;
            r.recommended = s.top;
            r.notes.emplace_back("single admissible dose; no comparisons");
        }
        return r;
    }
    const int top = *s.top;
    r.top_dose = top;
    for (std::size_t i = 0; i < s.admissible.size(); ++i) {
        for (std::size_t j = i + 1; j < s.admissible.size(); ++j) {
            const int low = s.admissible[i];
            const int high = s.admissible[j];
            ComparisonRecord rec{high, low, pairwise_decision(arms[high], arms[low], model, cfg, prob), {}};
            if (high > top) rec.action = "high dose ranked below " + dose_name(top);
            r.pairs.push_back(rec);
        }
    }
    // Recommendation: anchored at d*, the lowest admissible lower dose whose
    // comparison with d* does not resolve to the high dose; else d*.
    for (int low : s.admissible) {
        if (low >= top) break;
        const auto it = std::find_if(r.pairs.begin(), r.pairs.end(),
                                     [&](const ComparisonRecord& c) { return c.high == top && c.low == low; });
        const Zone z = it->decision.zone;
        if (z == Zone::SelectHigh) continue;
        if (z == Zone::ConsiderHigh) {
            if (cfg.consider_policy == ConsiderPolicy::TreatAsHigh) continue;
            if (cfg.consider_policy == ConsiderPolicy::Report) {
                r.pending = *it;
                r.notes.push_back("consider zone between " + dose_name(low) + " and " + dose_name(top) +
                                  " left to the user");
                return r;
            }
        }
        r.recommended = low;
        return r;
    }
    r.recommended = top;
    return r;
}

}  // namespace doseopt
