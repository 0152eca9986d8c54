#include "doseopt/presets.hpp"

#include <sstream>

namespace doseopt {

namespace {

struct Published {
    int emp_truth, umet_truth, cui_truth;  // 1-based doses, 0 if absent
    double emp, umet, cui;
};

struct RowData {
    std::vector<double> efficacy;  // high doses only
    std::vector<double> toxicity;
    std::vector<double> biomarker;
    Published r1;  // emp_truth == 0 when the regime is not published
    Published r2;
};

constexpr Published kNone{0, 0, 0, 0, 0, 0};

// Binomial-truth table, n = 40, low dose (0.40, 0.13); one shared truth.
const std::vector<RowData> kT5 = {
    {{.45, .55, .75}, {.15, .20, .28}, {}, {4, 4, 0, 9, 50, 0}, kNone},
    {{.45, .55}, {.15, .20}, {}, {2, 2, 0, 16, 29, 0}, kNone},
    {{.45, .75}, {.15, .28}, {}, {3, 3, 0, 17, 73, 0}, kNone},
    {{.55, .45}, {.15, .20}, {}, {2, 2, 0, 9, 53, 0}, kNone},
    {{.55, .75}, {.20, .28}, {}, {3, 3, 0, 17, 54, 0}, kNone},
    {{.45, .58, .80}, {.17, .23, .30}, {}, {4, 4, 0, 13, 62, 0}, kNone},
    {{.58, .80}, {.17, .23}, {}, {3, 3, 0, 31, 70, 0}, kNone},
    {{.45, .80}, {.17, .30}, {}, {3, 3, 0, 20, 84, 0}, kNone},
    {{.58, .80}, {.23, .23}, {}, {3, 3, 0, 40, 78, 0}, kNone},
};

// n = 30, low dose (0.23, 0.13).
const std::vector<RowData> kT6 = {
    {{.47, .70}, {.20, .28}, {}, {1, 3, 0, 54, 55, 0}, {3, 3, 0, 70, 77, 0}},
    {{.27, .70}, {.15, .28}, {}, {1, 3, 0, 55, 89, 0}, {3, 3, 0, 84, 97, 0}},
    {{.27, .47}, {.15, .20}, {}, {1, 2, 0, 60, 20, 0}, {3, 3, 0, 55, 66, 0}},
    {{.47, .70}, {.15, .20}, {}, {3, 3, 0, 33, 62, 0}, {3, 3, 0, 74, 82, 0}},
    {{.47, .70}, {.20, .20}, {}, {3, 3, 0, 42, 69, 0}, {3, 3, 0, 86, 87, 0}},
    {{.47, .70}, {.28, .28}, {}, {1, 3, 0, 55, 66, 0}, {3, 3, 0, 86, 85, 0}},
    {{.27, .47, .70}, {.15, .20, .28}, {}, {1, 4, 0, 52, 53, 0}, {4, 4, 0, 66, 75, 0}},
    {{.47, .27}, {.15, .20}, {}, {1, 2, 0, 88, 68, 0}, {1, 2, 0, 48, 85, 0}},
    {{.47, .47}, {.15, .20}, {}, {1, 2, 0, 60, 72, 0}, {3, 2, 0, 45, 73, 0}},
};

// n = 30, low dose (0.40, 0.13).
const std::vector<RowData> kS2 = {
    {{.65, .85}, {.20, .28}, {}, {1, 2, 0, 58, 52, 0}, {3, 3, 0, 65, 76, 0}},
    {{.47, .85}, {.15, .28}, {}, {1, 3, 0, 58, 87, 0}, {3, 3, 0, 75, 95, 0}},
    {{.47, .65}, {.15, .20}, {}, {1, 2, 0, 61, 39, 0}, {3, 3, 0, 55, 65, 0}},
    {{.65, .85}, {.15, .20}, {}, {3, 3, 0, 29, 59, 0}, {3, 3, 0, 69, 81, 0}},
    {{.65, .85}, {.20, .20}, {}, {3, 3, 0, 37, 67, 0}, {3, 3, 0, 83, 86, 0}},
    {{.65, .85}, {.28, .28}, {}, {1, 3, 0, 58, 65, 0}, {3, 3, 0, 83, 84, 0}},
    {{.47, .65, .85}, {.15, .20, .28}, {}, {1, 3, 0, 58, 39, 0}, {4, 4, 0, 58, 74, 0}},
    {{.65, .47}, {.15, .20}, {}, {1, 2, 0, 86, 76, 0}, {1, 2, 0, 50, 88, 0}},
    {{.65, .65}, {.15, .20}, {}, {1, 2, 0, 61, 76, 0}, {3, 2, 0, 44, 73, 0}},
};

// Three endpoints, n = 30, low dose (0.23, 0.13, 0.2).
const std::vector<RowData> kT7 = {
    {{.48, .70}, {.20, .28}, {.4, .5}, {1, 3, 3, 52, 54, 55}, {3, 3, 3, 61, 78, 80}},
    {{.27, .70}, {.15, .28}, {.3, .5}, {1, 3, 3, 52, 92, 94}, {3, 3, 3, 76, 98, 99}},
    {{.27, .48}, {.15, .20}, {.3, .4}, {1, 3, 3, 50, 47, 47}, {3, 3, 3, 55, 75, 77}},
    {{.48, .70}, {.15, .20}, {.4, .5}, {3, 3, 3, 38, 60, 60}, {3, 3, 3, 68, 83, 84}},
    {{.48, .70}, {.20, .20}, {.4, .5}, {3, 3, 3, 48, 68, 67}, {3, 3, 3, 82, 87, 88}},
    {{.48, .70}, {.28, .28}, {.4, .5}, {1, 3, 3, 52, 65, 66}, {3, 3, 3, 83, 86, 87}},
    {{.27, .48, .70}, {.15, .20, .28}, {.3, .4, .5}, {1, 4, 4, 54, 54, 56}, {4, 4, 4, 59, 77, 79}},
    {{.48, .27}, {.15, .20}, {.3, .4}, {1, 2, 2, 61, 71, 72}, {1, 2, 2, 48, 89, 90}},
    {{.48, .48}, {.15, .20}, {.3, .4}, {1, 2, 2, 50, 77, 77}, {3, 2, 2, 45, 75, 75}},
};

// Three endpoints, n = 30, low dose (0.40, 0.13, 0.2); S3 publishes regime 1
// only and S4 regime 2 only.
const std::vector<RowData> kS34 = {
    {{.65, .85}, {.20, .28}, {.4, .5}, {1, 2, 2, 55, 45, 44}, {3, 3, 3, 59, 78, 79}},
    {{.47, .85}, {.15, .28}, {.3, .5}, {1, 3, 3, 55, 90, 91}, {3, 3, 3, 69, 98, 98}},
    {{.47, .65}, {.15, .20}, {.3, .4}, {1, 2, 2, 52, 32, 33}, {3, 3, 3, 54, 69, 69}},
    {{.65, .85}, {.15, .20}, {.4, .5}, {3, 3, 3, 36, 59, 60}, {3, 3, 3, 66, 83, 83}},
    {{.65, .85}, {.20, .20}, {.4, .5}, {3, 3, 3, 46, 67, 68}, {3, 3, 3, 80, 87, 88}},
    {{.65, .85}, {.28, .28}, {.4, .5}, {1, 3, 3, 55, 65, 66}, {3, 3, 3, 80, 87, 87}},
    {{.47, .65, .85}, {.15, .20, .28}, {.3, .4, .5}, {1, 3, 3, 58, 37, 38}, {4, 4, 4, 53, 78, 79}},
    {{.65, .47}, {.15, .20}, {.3, .4}, {1, 2, 2, 64, 72, 73}, {1, 2, 2, 47, 88, 89}},
    {{.65, .65}, {.15, .20}, {.3, .4}, {1, 2, 2, 52, 74, 75}, {3, 2, 2, 45, 73, 72}},
};

struct TableSetup {
    const std::vector<RowData>* rows;
    std::string title;
    int n;
    MarginalRates low;
    bool three;
    bool binomial;
    bool regime1;
    bool regime2;
};

std::vector<PublishedValue> published_values(const Published& p, bool three) {
    std::vector<PublishedValue> out{{Method::Empirical, p.emp_truth - 1, p.emp},
                                    {Method::Umet, p.umet_truth - 1, p.umet}};
    if (three) out.push_back({Method::Cui, p.cui_truth - 1, p.cui});
    return out;
}

ScenarioSpec base_spec(const TableSetup& t, const RowData& row, const Regime& reg, int replications) {
    ScenarioSpec s;
    s.doses.push_back(t.low);
    for (std::size_t k = 0; k < row.efficacy.size(); ++k) {
        MarginalRates r{row.toxicity[k], row.efficacy[k], std::nullopt};
        if (t.three) r.biomarker = row.biomarker[k];
        s.doses.push_back(r);
    }
    s.n = t.n;
    s.replications = replications;
    if (t.three) {
        s.utility3 = three_endpoint_utility();
        s.cui = three_endpoint_weights();
        s.empirical.bd1 = 0.1;
    } else {
        s.utility2 = UtilityTable2{100.0, 35.0, 65.0, 0.0};
    }
    s.decision.alpha1 = reg.alpha1;
    s.decision.alpha2 = 0.34;
    if (s.decision.alpha2 <= s.decision.alpha1) s.decision.alpha2 = 0.5;
    s.decision.consider_policy =
        reg.consider == EmpiricalConsiderPolicy::High ? ConsiderPolicy::TreatAsHigh : ConsiderPolicy::TreatAsLow;
    s.empirical.consider_policy = reg.consider;
    s.empirical.screen_admissibility = true;
    if (t.binomial) {
        s.truth_mode = TruthMode::BinomialTest;
        s.binomial_alpha = reg.alpha1;
    }
    return s;
}

TableSetup setup_for(const std::string& id) {
    const MarginalRates low23{0.13, 0.23, std::nullopt};
    const MarginalRates low40{0.13, 0.40, std::nullopt};
    const MarginalRates low23b{0.13, 0.23, 0.2};
    const MarginalRates low40b{0.13, 0.40, 0.2};
    if (id == "T5") return {&kT5, "Two endpoints, binomial-test truth, n = 40", 40, low40, false, true, true, false};
    if (id == "T6") return {&kT6, "Two endpoints, low dose (0.23, 0.13), n = 30", 30, low23, false, false, true, true};
    if (id == "S2") return {&kS2, "Two endpoints, low dose (0.40, 0.13), n = 30", 30, low40, false, false, true, true};
    if (id == "T7")
        return {&kT7, "Three endpoints, low dose (0.23, 0.13, 0.2), n = 30", 30, low23b, true, false, true, true};
    if (id == "S3")
        return {&kS34, "Three endpoints, low dose (0.40, 0.13, 0.2), n = 30, regime 1", 30, low40b, true, false, true,
                false};
    if (id == "S4")
        return {&kS34, "Three endpoints, low dose (0.40, 0.13, 0.2), n = 30, regime 2", 30, low40b, true, false, false,
                true};
    std::ostringstream os;
    os << "unknown preset '" << id << "'; valid presets:";
    for (const auto& v : preset_ids()) os << ' ' << v;
    throw InputError(os.str());
}

}  // namespace

Regime regime(int id) {
    if (id == 1) return {1, 0.2, EmpiricalConsiderPolicy::Low};
    if (id == 2) return {2, 0.34, EmpiricalConsiderPolicy::High};
    throw InputError("regime must be 1 or 2");
}

const PublishedValue* PresetRow::published_for(Method m) const {
    for (const auto& p : published)
        if (p.method == m) return &p;
    return nullptr;
}

std::vector<std::string> preset_ids() { return {"T5", "T6", "T7", "S2", "S3", "S4"}; }

UtilityTable3 three_endpoint_utility() {
    OffsetSpec off;
    off.a = {10.0, 5.0, 5.0, 10.0};
    off.override_positive[3] = 0.0;
    return utility3_from_offsets({90.0, 30.0, 60.0, 0.0}, off);
}

CuiWeights three_endpoint_weights() { return {0.3, 0.6, 0.1}; }

TablePreset make_preset(const std::string& id, int replications) {
    const TableSetup t = setup_for(id);
    TablePreset p;
    p.id = id;
    p.title = t.title;
    p.n = t.n;
    p.three_endpoint = t.three;
    for (int reg_id : {1, 2}) {
        if ((reg_id == 1 && !t.regime1) || (reg_id == 2 && !t.regime2)) continue;
        const Regime reg = regime(reg_id);
        for (std::size_t i = 0; i < t.rows->size(); ++i) {
            const RowData& row = (*t.rows)[i];
            PresetRow pr;
            pr.scenario = static_cast<int>(i) + 1;
            pr.regime = reg_id;
            pr.spec = base_spec(t, row, reg, replications);
            pr.spec.id = id + "-S" + std::to_string(pr.scenario) + "-R" + std::to_string(reg_id);
            pr.published = published_values(reg_id == 1 ? row.r1 : row.r2, t.three);
            p.rows.push_back(std::move(pr));
        }
    }
    return p;
}

}  // namespace doseopt
