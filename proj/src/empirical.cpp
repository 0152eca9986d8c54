#include "doseopt/empirical.hpp"

#include <cmath>
#include <limits>

namespace doseopt {

namespace {

using C = EmpiricalCell;

// [row][column]; rows by TR, columns by ED, see EmpiricalCellDecision.
constexpr C kTwoEndpoint[3][3] = {
    {C::High, C::High, C::Consider},
    {C::High, C::Consider, C::Low},
    {C::Consider, C::Low, C::Low},
};
constexpr C kBiomarkerAbove[3][3] = {
    {C::High, C::High, C::High},
    {C::High, C::Consider, C::Low},
    {C::Consider, C::Low, C::Low},
};
constexpr C kBiomarkerAtOrBelow[3][3] = {
    {C::High, C::High, C::Consider},
    {C::High, C::Consider, C::Low},
    {C::Low, C::Low, C::Low},
};

int tr_row(double tr, const EmpiricalThresholds& thr) {
    if (tr < thr.tr1 - kBoundaryTolerance) return 0;
    if (tr <= thr.tr2 + kBoundaryTolerance) return 1;
    return 2;
}

int ed_column(double ed, const EmpiricalThresholds& thr) {
    if (ed > thr.ed2 + kBoundaryTolerance) return 0;
    if (ed >= thr.ed1 - kBoundaryTolerance) return 1;
    return 2;
}

EmpiricalCellDecision lookup(const C (&table)[3][3], double ed, double tr, const EmpiricalThresholds& thr) {
    EmpiricalCellDecision d;
    d.row = tr_row(tr, thr);
    d.column = ed_column(ed, thr);
    d.cell = table[d.row][d.column];
    d.starred = d.row == 0 && d.column == 2 && d.cell == C::Consider;
    if (d.starred && ed < 0.0 && thr.neg_ed_policy == NegativeEdPolicy::Low) d.cell = C::Low;
    return d;
}

std::string dose_name(int index) { return "dose " + std::to_string(index + 1); }

}  // namespace

void EmpiricalThresholds::validate() const {
    if (!std::isfinite(ed1) || !std::isfinite(ed2) || !(ed1 < ed2))
        throw InputError("empirical thresholds require finite ED1 < ED2");
    if (!std::isfinite(tr1) || !std::isfinite(tr2) || !(tr1 < tr2))
        throw InputError("empirical thresholds require finite TR1 < TR2");
    if (bd1 && !std::isfinite(*bd1)) throw InputError("BD1 must be finite");
}

double toxicity_ratio(double tox_high, double tox_low) {
    if (tox_low > 0.0) return tox_high / tox_low;
    return tox_high > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
}

EmpiricalCellDecision empirical_cell2(double ed, double tr, const EmpiricalThresholds& thr) {
    return lookup(kTwoEndpoint, ed, tr, thr);
}

EmpiricalCellDecision empirical_cell3(double ed, double tr, double bd, const EmpiricalThresholds& thr) {
    if (!thr.bd1) throw InputError("three-endpoint empirical table needs BD1");
    const bool above = bd > *thr.bd1 + kBoundaryTolerance;
    EmpiricalCellDecision d = lookup(above ? kBiomarkerAbove : kBiomarkerAtOrBelow, ed, tr, thr);
    d.biomarker_block = above;
    return d;
}

Resolution resolve(EmpiricalCell cell, EmpiricalConsiderPolicy policy) {
    switch (cell) {
        case C::High: return Resolution::High;
        case C::Low: return Resolution::Low;
        case C::Consider:
            if (policy == EmpiricalConsiderPolicy::High) return Resolution::High;
            if (policy == EmpiricalConsiderPolicy::Low) return Resolution::Low;
            return Resolution::Pending;
    }
    return Resolution::Pending;
}

std::vector<MarginalRates> observed_rates(const std::vector<ArmData>& arms) {
    std::vector<MarginalRates> out;
    out.reserve(arms.size());
    for (const auto& a : arms) {
        const auto tox = a.toxicity_count();
        const auto eff = a.efficacy_count();
        if (!tox || !eff) throw InputError("arm '" + a.label + "': empirical design needs marginal counts");
        const double n = a.n > 0 ? a.n : 1.0;
        MarginalRates r{*tox / n, *eff / n, std::nullopt};
        if (const auto bio = a.biomarker_count()) r.biomarker = *bio / n;
        out.push_back(r);
    }
    return out;
}

EmpiricalStep empirical_compare(const MarginalRates& high, const MarginalRates& low, int high_index,
                                int low_index, const EmpiricalThresholds& thr) {
    EmpiricalStep s;
    s.high = high_index;
    s.low = low_index;
    s.ed = high.efficacy - low.efficacy;
    s.tr = toxicity_ratio(high.toxicity, low.toxicity);
    if (thr.bd1 && high.biomarker && low.biomarker) {
        s.bd = *high.biomarker - *low.biomarker;
        s.cell = empirical_cell3(s.ed, s.tr, *s.bd, thr);
    } else {
        s.cell = empirical_cell2(s.ed, s.tr, thr);
    }
    s.resolution = resolve(s.cell.cell, thr.consider_policy);
    return s;
}

EmpiricalTrace empirical_sequential(const std::vector<MarginalRates>& rates, const EmpiricalThresholds& thr,
                                    const std::vector<AdmissibilityVerdict>& admissibility) {
    thr.validate();
    if (rates.empty()) throw InputError("at least one dose is required");
    EmpiricalTrace t;
    t.admissibility = admissibility;
    std::vector<int> candidates;
    for (int d = 0; d < static_cast<int>(rates.size()); ++d) {
        if (!admissibility.empty() && !admissibility.at(d).admissible()) {
            t.notes.push_back(dose_name(d) + " inadmissible; skipped");
            continue;
        }
        candidates.push_back(d);
    }
    if (candidates.empty()) {
        t.notes.emplace_back("no admissible dose; no dose selectable");
        return t;
    }
    const int ref = candidates.back();
    for (int low : candidates) {
        if (low == ref) break;
        EmpiricalStep s = empirical_compare(rates[ref], rates[low], ref, low, thr);
        if (s.resolution == Resolution::High) {
            s.action = "continue";
            t.steps.push_back(s);
            continue;
        }
        if (s.resolution == Resolution::Low) {
            s.action = "select " + dose_name(low);
            t.steps.push_back(s);
            t.selected = low;
            return t;
        }
        s.action = "consider zone left to the user";
        t.steps.push_back(s);
        t.pending = true;
        return t;
    }
    t.selected = ref;
    return t;
}

EmpiricalTrace empirical_sequential(const std::vector<ArmData>& arms, const EmpiricalThresholds& thr,
                                    const AdmissibilityConfig& adm) {
    for (const auto& a : arms) a.validate();
    std::vector<AdmissibilityVerdict> verdicts;
    if (thr.screen_admissibility) verdicts = admissible_set(arms, adm);
    return empirical_sequential(observed_rates(arms), thr, verdicts);
}

std::vector<EmpiricalStep> empirical_pairwise(const std::vector<MarginalRates>& rates,
                                              const EmpiricalThresholds& thr) {
    thr.validate();
    std::vector<EmpiricalStep> out;
    const int d = static_cast<int>(rates.size());
    for (int low = 0; low < d; ++low)
        for (int high = low + 1; high < d; ++high)
            out.push_back(empirical_compare(rates[high], rates[low], high, low, thr));
    return out;
}

const char* to_string(EmpiricalCell c) {
    switch (c) {
        case C::High: return "high";
        case C::Low: return "low";
        case C::Consider: return "consider";
    }
    return "?";
}

const char* cell_letter(EmpiricalCell c) {
    switch (c) {
        case C::High: return "H";
        case C::Low: return "L";
        case C::Consider: return "C";
    }
    return "?";
}

const char* to_string(Resolution r) {
    switch (r) {
        case Resolution::High: return "high";
        case Resolution::Low: return "low";
        case Resolution::Pending: return "pending";
    }
    return "?";
}

const char* to_string(EmpiricalConsiderPolicy p) {
    switch (p) {
        case EmpiricalConsiderPolicy::Low: return "low";
        case EmpiricalConsiderPolicy::High: return "high";
        case EmpiricalConsiderPolicy::Report: return "report";
    }
    return "?";
}

const char* to_string(NegativeEdPolicy p) { return p == NegativeEdPolicy::Consider ? "consider" : "low"; }

}  // namespace doseopt
