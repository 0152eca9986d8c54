#include "doseopt/scenario.hpp"

#include <cmath>
#include <sstream>

namespace doseopt {

std::vector<Method> ScenarioSpec::methods() const {
    std::vector<Method> out{Method::Empirical, Method::Umet};
    if (cui) out.push_back(Method::Cui);
    return out;
}

MetricModel ScenarioSpec::model(Method m) const {
    switch (m) {
        case Method::Umet:
            if (utility3) return MetricModel::umet(*utility3);
            if (utility2) return MetricModel::umet(*utility2);
            throw InputError("scenario '" + id + "': no utility table");
        case Method::Cui:
            if (!cui) throw InputError("scenario '" + id + "': no CUI weights");
            return MetricModel::cui(*cui);
        case Method::Empirical: break;
    }
    throw InputError("the empirical design has no metric model");
}

void ScenarioSpec::validate() const {
    auto fail = [&](const std::string& what) { throw InputError("scenario '" + id + "': " + what); };
    if (doses.empty()) fail("no doses");
    if (n < 1) fail("n must be at least 1");
    if (replications < 1) fail("replications must be at least 1");
    const bool three = three_endpoint();
    for (const auto& d : doses) {
        if (!(d.toxicity >= 0.0 && d.toxicity <= 1.0) || !(d.efficacy >= 0.0 && d.efficacy <= 1.0))
            fail("rates must lie in [0, 1]");
        if (d.biomarker.has_value() != three) fail("biomarker rate must be given for all doses or none");
        if (d.biomarker && !(*d.biomarker >= 0.0 && *d.biomarker <= 1.0)) fail("rates must lie in [0, 1]");
    }
    if (utility2.has_value() == utility3.has_value()) fail("exactly one utility table is required");
    if (utility3 && !three) fail("a three-endpoint utility table needs biomarker rates");
    if (utility2 && three) fail("biomarker rates need a three-endpoint utility table");
    if (utility2) utility2->validate();
    if (utility3) utility3->validate();
    if (cui) {
        cui->validate();
        if (cui->uses_biomarker() && !three) fail("CUI biomarker weight needs biomarker rates");
    }
    if (three && !empirical.bd1) fail("three-endpoint empirical design needs BD1");
    correlation_cholesky(correlations);
    decision.validate();
    admissibility.validate();
    empirical.validate();
    if (!(truth_delta >= -1.0 && truth_delta <= 1.0)) fail("truth_delta must lie in [-1, 1]");
    if (!(binomial_alpha > 0.0 && binomial_alpha < 1.0)) fail("binomial_alpha must lie in (0, 1)");
}

const char* to_string(Method m) {
    switch (m) {
        case Method::Empirical: return "empirical";
        case Method::Umet: return "umet";
        case Method::Cui: return "cui";
    }
    return "?";
}

const char* method_label(Method m) {
    switch (m) {
        case Method::Empirical: return "Empirical";
        case Method::Umet: return "U-MET-m";
        case Method::Cui: return "CUI-MET";
    }
    return "?";
}

const char* to_string(TruthMode m) { return m == TruthMode::BinomialTest ? "binomial" : "per-method"; }

}  // namespace doseopt
