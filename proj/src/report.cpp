#include "doseopt/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

namespace doseopt {

using nlohmann::json;

namespace {

std::string dose_name(int index) { return "dose " + std::to_string(index + 1); }

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

const char* difference_label(Method m) { return m == Method::Cui ? "CUI_delta" : "u*_delta"; }

}  // namespace

std::string fixed6(double v) {
    // Avoid "-0.000000" for tiny negatives.
    if (std::abs(v) < 5e-7) v = 0.0;
    return fmt("%.6f", v);
}

bool DecisionReport::all_selected() const {
    for (const auto& r : runs)
        if (!r.selected) return false;
    return !runs.empty();
}

std::vector<Method> requested_methods(const TrialInputDocument& doc, const std::string& flag) {
    if (flag == "all") {
        std::vector<Method> out;
        for (Method m : {Method::Umet, Method::Cui, Method::Empirical})
            if (doc.has(m)) out.push_back(m);
        return out;
    }
    const Method m = parse_method(flag);
    if (!doc.has(m)) {
        if (m == Method::Cui) throw SchemaError("cui", "method cui requested but the document has no cui section");
        throw SchemaError(doc.arms.front().cells8 ? "utility3" : "utility",
                          "method umet requested but the document has no matching utility table");
    }
    return {m};
}

DecisionReport run_decide(const TrialInputDocument& doc, const std::vector<Method>& methods, Strategy strategy) {
    DecisionReport rep;
    rep.input = doc;
    rep.strategy = strategy;
    DecisionConfig cfg = doc.decision;
    cfg.strategy = strategy;
    for (Method m : methods) {
        MethodRun run;
        run.method = m;
        run.strategy = strategy;
        if (m == Method::Empirical) {
            run.empirical = empirical_sequential(doc.arms, doc.empirical, doc.admissibility);
            if (strategy == Strategy::Pairwise) {
                run.empirical_pairs = empirical_pairwise(observed_rates(doc.arms), doc.empirical);
                for (auto& s : run.empirical_pairs) s.action = to_string(s.resolution);
            }
            run.selected = run.empirical->selected;
            run.pending = run.empirical->pending;
        } else {
            MetricModel model = doc.model(m);
            cfg.metric = m == Method::Cui ? Metric::Cui : Metric::Umet;
            if (strategy == Strategy::Sequential) {
                run.sequential = sequential_select(doc.arms, model, cfg, doc.admissibility);
                run.selected = run.sequential->selected;
            } else {
                run.pairwise = pairwise_matrix(doc.arms, model, cfg, doc.admissibility);
                run.selected = run.pairwise->recommended;
                run.pending = run.pairwise->pending.has_value();
            }
        }
        rep.runs.push_back(std::move(run));
    }
    return rep;
}

// ---------------------------------------------------------------- text trace

namespace {

void render_reconstruction(std::ostream& os, const TrialInputDocument& doc) {
    os << "Counts (" << to_string(doc.reconstruction) << " reconstruction):\n";
    const bool three = doc.arms.front().cells8 || doc.arms.front().biomarker_positive;
    for (std::size_t i = 0; i < doc.arms.size(); ++i) {
        const ArmData& a = doc.arms[i];
        const std::string name = dose_name(static_cast<int>(i));
        os << "  " << name;
        if (doc.doses[i].label != name) os << " (" << doc.doses[i].label << ")";
        os << "  n=" << a.n;
        const auto& r = doc.doses[i].stated_rates;
        auto item = [&](const char* name, std::optional<double> rate, std::optional<double> count) {
            os << "  " << name << " ";
            if (rate) os << fmt("%.3f", *rate) << " -> ";
            os << (count ? fmt("%.2f", *count) : std::string("-"));
        };
        item("tox", r ? std::optional<double>(r->toxicity) : std::nullopt, a.toxicity_count());
        item("eff", r ? std::optional<double>(r->efficacy) : std::nullopt, a.efficacy_count());
        if (three) item("bio", r ? r->biomarker : std::nullopt, a.biomarker_count());
        os << "\n";
    }
    if (doc.reconstruction == Reconstruction::Expected)
        for (std::size_t i = 0; i < doc.doses.size(); ++i)
            if (doc.doses[i].stated_rates) {
                os << "  (joint cells from rates assume independent endpoints)\n";
                break;
            }
}

void render_admissibility(std::ostream& os, const std::vector<AdmissibilityVerdict>& verdicts) {
    for (const auto& v : verdicts) {
        os << "  " << dose_name(v.dose) << "  Pr(tox > phi_T) " << fmt("%.3f", v.p_toxic) << "  Pr(eff < phi_E) "
           << fmt("%.3f", v.p_futile);
        if (v.p_biomarker_futile) os << "  Pr(bio < phi_B) " << fmt("%.3f", *v.p_biomarker_futile);
        os << "  " << (v.admissible() ? "admissible" : v.toxic ? "too toxic" : "futile") << "\n";
    }
}

void render_comparison(std::ostream& os, const ComparisonRecord& c) {
    os << "  " << dose_name(c.low) << " vs " << (c.high + 1) << "  " << std::setw(9)
       << fmt("%.1f", c.decision.observed_difference) << "  " << fmt("%.3f", c.decision.probability) << "  "
       << zone_letter(c.decision.zone);
    if (!c.action.empty()) os << "  " << c.action;
    os << "\n";
}

void render_utility_run(std::ostream& os, const MethodRun& run) {
    const std::vector<AdmissibilityVerdict>& adm =
        run.sequential ? run.sequential->admissibility : run.pairwise->admissibility;
    os << "Admissibility:\n";
    render_admissibility(os, adm);
    if (run.sequential) {
        const SelectionTrace& t = *run.sequential;
        os << "Desirability:";
        for (std::size_t d = 0; d < t.desirability.size(); ++d) {
            os << "  " << dose_name(static_cast<int>(d)) << " ";
            os << (std::isnan(t.desirability[d]) ? std::string("-") : fmt("%.1f", 100.0 * t.desirability[d]));
        }
        os << "\n";
        if (t.top_dose) os << "Most desirable: " << dose_name(*t.top_dose) << "\n";
        if (t.steps.empty()) os << "  no comparisons\n";
        else os << "  comparison   " << std::setw(9) << difference_label(run.method) << "  Pr     zone  action\n";
        for (const auto& s : t.steps) render_comparison(os, s);
        for (const auto& n : t.notes) os << "  note: " << n << "\n";
    } else {
        const PairwiseResult& r = *run.pairwise;
        if (r.top_dose) os << "Most desirable: " << dose_name(*r.top_dose) << "\n";
        if (r.pairs.empty()) os << "  no comparisons\n";
        else os << "  comparison   " << std::setw(9) << difference_label(run.method) << "  Pr     zone\n";
        for (const auto& s : r.pairs) render_comparison(os, s);
        for (const auto& n : r.notes) os << "  note: " << n << "\n";
    }
}

std::string tr_text(double tr) { return std::isinf(tr) ? std::string("inf") : fmt("%.2f", tr); }

void render_empirical_step(std::ostream& os, const EmpiricalStep& s) {
    os << "  " << dose_name(s.low) << " vs " << (s.high + 1) << "  ED " << fmt("%.3f", s.ed) << "  TR " << tr_text(s.tr);
    if (s.bd) os << "  BD " << fmt("%.3f", *s.bd);
    os << "  " << cell_letter(s.cell.cell) << (s.cell.starred ? "*" : "") << "  " << to_string(s.resolution);
    if (!s.action.empty() && s.action != to_string(s.resolution)) os << "  " << s.action;
    os << "\n";
}

void render_empirical_run(std::ostream& os, const MethodRun& run, const EmpiricalThresholds& thr) {
    os << "Thresholds: ED1 " << thr.ed1 << "  ED2 " << thr.ed2 << "  TR1 " << thr.tr1 << "  TR2 " << thr.tr2;
    if (thr.bd1) os << "  BD1 " << *thr.bd1;
    os << "  consider -> " << to_string(thr.consider_policy) << "\n";
    const EmpiricalTrace& t = *run.empirical;
    if (!t.admissibility.empty()) {
        os << "Admissibility:\n";
        render_admissibility(os, t.admissibility);
    }
    if (!run.empirical_pairs.empty()) {
        os << "  all pairs:\n";
        for (const auto& s : run.empirical_pairs) render_empirical_step(os, s);
        os << "  scan from the highest dose:\n";
    }
    for (const auto& s : t.steps) render_empirical_step(os, s);
    for (const auto& n : t.notes) os << "  note: " << n << "\n";
}

}  // namespace

std::string render_trace(const DecisionReport& report) {
    std::ostringstream os;
    const TrialInputDocument& doc = report.input;
    if (!doc.title.empty()) os << doc.title << "\n";
    render_reconstruction(os, doc);
    for (const auto& run : report.runs) {
        os << "\n" << method_label(run.method) << ", " << to_string(run.strategy);
        if (run.method != Method::Empirical) {
            os << " (delta " << fmt("%.3f", doc.decision.delta) << ", alpha1 " << fmt("%.2f", doc.decision.alpha1)
               << ", C1 " << fmt("%.3f", doc.decision.c1());
            if (run.strategy == Strategy::Pairwise)
                os << ", alpha2 " << fmt("%.2f", doc.decision.alpha2) << ", C2 " << fmt("%.3f", doc.decision.c2());
            os << ")";
        }
        os << "\n";
        if (run.method == Method::Empirical) render_empirical_run(os, run, doc.empirical);
        else render_utility_run(os, run);
        if (run.selected) {
            const std::string name = dose_name(*run.selected);
            os << "selected: " << name;
            if (doc.doses[*run.selected].label != name) os << " (" << doc.doses[*run.selected].label << ")";
            os << "\n";
        }
        else if (run.pending) os << "selected: none (consider zone left to the user)\n";
        else os << "selected: none (no dose selectable)\n";
    }
    return os.str();
}

// ---------------------------------------------------------- JSON record

namespace {

json opt_dose(const std::optional<int>& d) { return d ? json(*d + 1) : json(nullptr); }

json doses_json(const std::vector<int>& v) {
    json a = json::array();
    for (int d : v) a.push_back(d + 1);
    return a;
}

json verdicts_json(const std::vector<AdmissibilityVerdict>& verdicts) {
    json a = json::array();
    for (const auto& v : verdicts) {
        json j{{"dose", v.dose + 1},      {"p_toxic", v.p_toxic}, {"p_futile", v.p_futile},
               {"toxic", v.toxic},         {"futile", v.futile},   {"biomarker_futile", v.biomarker_futile},
               {"admissible", v.admissible()}};
        if (v.p_biomarker_futile) j["p_biomarker_futile"] = *v.p_biomarker_futile;
        a.push_back(j);
    }
    return a;
}

json comparison_json(const ComparisonRecord& c) {
    return json{{"high", c.high + 1},
                {"low", c.low + 1},
                {"difference", c.decision.observed_difference},
                {"probability", c.decision.probability},
                {"zone", to_string(c.decision.zone)},
                {"posterior_high", {{"a", c.decision.posteriors.high.a}, {"b", c.decision.posteriors.high.b}}},
                {"posterior_low", {{"a", c.decision.posteriors.low.a}, {"b", c.decision.posteriors.low.b}}},
                {"action", c.action}};
}

json empirical_step_json(const EmpiricalStep& s) {
    json j{{"high", s.high + 1},
           {"low", s.low + 1},
           {"ed", s.ed},
           {"tr", std::isinf(s.tr) ? json("inf") : json(s.tr)},
           {"cell", to_string(s.cell.cell)},
           {"starred", s.cell.starred},
           {"resolution", to_string(s.resolution)},
           {"action", s.action}};
    if (s.bd) j["bd"] = *s.bd;
    return j;
}

json notes_json(const std::vector<std::string>& notes) { return json(notes); }

}  // namespace

json to_json(const DecisionReport& report) {
    json runs = json::array();
    for (const auto& run : report.runs) {
        json r{{"method", to_string(run.method)},
               {"strategy", to_string(run.strategy)},
               {"selected", opt_dose(run.selected)},
               {"pending", run.pending}};
        if (run.sequential) {
            const SelectionTrace& t = *run.sequential;
            json des = json::array();
            for (double d : t.desirability) des.push_back(std::isnan(d) ? json(nullptr) : json(d));
            json steps = json::array();
            for (const auto& s : t.steps) steps.push_back(comparison_json(s));
            r["admissibility"] = verdicts_json(t.admissibility);
            r["desirability"] = des;
            r["top_dose"] = opt_dose(t.top_dose);
            r["removed"] = doses_json(t.removed);
            r["skipped"] = doses_json(t.skipped);
            r["steps"] = steps;
            r["notes"] = notes_json(t.notes);
        } else if (run.pairwise) {
            const PairwiseResult& p = *run.pairwise;
            json pairs = json::array();
            for (const auto& s : p.pairs) pairs.push_back(comparison_json(s));
            r["admissibility"] = verdicts_json(p.admissibility);
            r["top_dose"] = opt_dose(p.top_dose);
            r["pairs"] = pairs;
            r["pending_pair"] = p.pending ? comparison_json(*p.pending) : json(nullptr);
            r["notes"] = notes_json(p.notes);
        } else {
            const EmpiricalTrace& t = *run.empirical;
            json steps = json::array();
            for (const auto& s : t.steps) steps.push_back(empirical_step_json(s));
            r["admissibility"] = verdicts_json(t.admissibility);
            r["steps"] = steps;
            if (run.strategy == Strategy::Pairwise) {
                json pairs = json::array();
                for (const auto& s : run.empirical_pairs) pairs.push_back(empirical_step_json(s));
                r["pairs"] = pairs;
            }
            r["notes"] = notes_json(t.notes);
        }
        runs.push_back(r);
    }
    return json{{"format", "doseopt-decision"},
                {"version", kReportVersion},
                {"strategy", to_string(report.strategy)},
                {"input", to_json(report.input)},
                {"methods", runs}};
}

// ---------------------------------------------------- record validation

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) { throw SchemaError(path, what); }

const json& field(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) bad(path, "expected an object");
    if (!obj.contains(key)) bad(path.empty() ? key : path + "." + key, "required field missing");
    return obj.at(key);
}

void expect_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || it.key() == a;
        if (!ok) bad(path + "." + it.key(), "unknown field");
    }
}

double probability(const json& v, const std::string& path) {
    if (!v.is_number()) bad(path, "expected a number");
    const double p = v.get<double>();
    if (!(p >= 0.0 && p <= 1.0)) bad(path, "probability outside [0, 1]");
    return p;
}

std::optional<int> dose_ref(const json& v, const std::string& path, std::size_t doses, bool nullable) {
    if (v.is_null() && nullable) return std::nullopt;
    if (!v.is_number_integer()) bad(path, "expected a dose number");
    const int d = v.get<int>();
    if (d < 1 || d > static_cast<int>(doses)) bad(path, "dose number out of range");
    return d - 1;
}

void check_verdicts(const json& a, const std::string& path, std::size_t doses) {
    if (!a.is_array()) bad(path, "expected an array");
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        expect_keys(a[i], {"dose", "p_toxic", "p_futile", "p_biomarker_futile", "toxic", "futile", "biomarker_futile", "admissible"}, p);
        dose_ref(field(a[i], "dose", p), p + ".dose", doses, false);
        probability(field(a[i], "p_toxic", p), p + ".p_toxic");
        probability(field(a[i], "p_futile", p), p + ".p_futile");
        for (const char* k : {"toxic", "futile", "biomarker_futile", "admissible"})
            if (!field(a[i], k, p).is_boolean()) bad(p + "." + k, "expected true or false");
        const bool adm = !a[i]["toxic"].get<bool>() && !a[i]["futile"].get<bool>() && !a[i]["biomarker_futile"].get<bool>();
        if (adm != a[i]["admissible"].get<bool>()) bad(p + ".admissible", "disagrees with the component flags");
    }
}

double check_comparison(const json& c, const std::string& p, std::size_t doses) {
    expect_keys(c, {"high", "low", "difference", "probability", "zone", "posterior_high", "posterior_low", "action"}, p);
    const int high = *dose_ref(field(c, "high", p), p + ".high", doses, false);
    const int low = *dose_ref(field(c, "low", p), p + ".low", doses, false);
    if (high <= low) bad(p, "high dose must be above the low dose");
    if (!field(c, "difference", p).is_number()) bad(p + ".difference", "expected a number");
    const std::string zone = field(c, "zone", p).is_string() ? c["zone"].get<std::string>() : "";
    if (zone != "select-high" && zone != "select-low" && zone != "consider-high")
        bad(p + ".zone", "expected select-high, select-low or consider-high");
    if (!field(c, "action", p).is_string()) bad(p + ".action", "expected a string");
    for (const char* k : {"posterior_high", "posterior_low"}) {
        const json& b = field(c, k, p);
        const std::string bp = p + "." + k;
        expect_keys(b, {"a", "b"}, bp);
        if (!field(b, "a", bp).is_number() || !field(b, "b", bp).is_number() || b["a"].get<double>() <= 0.0 ||
            b["b"].get<double>() <= 0.0)
            bad(bp, "expected positive shapes a and b");
    }
    return probability(field(c, "probability", p), p + ".probability");
}

void check_empirical_step(const json& s, const std::string& p, std::size_t doses) {
    expect_keys(s, {"high", "low", "ed", "tr", "bd", "cell", "starred", "resolution", "action"}, p);
    dose_ref(field(s, "high", p), p + ".high", doses, false);
    dose_ref(field(s, "low", p), p + ".low", doses, false);
    if (!field(s, "ed", p).is_number()) bad(p + ".ed", "expected a number");
    const json& tr = field(s, "tr", p);
    if (!(tr.is_number() || tr == "inf")) bad(p + ".tr", "expected a number or \"inf\"");
    const std::string cell = field(s, "cell", p).is_string() ? s["cell"].get<std::string>() : "";
    if (cell != "high" && cell != "low" && cell != "consider") bad(p + ".cell", "expected high, low or consider");
    const std::string res = field(s, "resolution", p).is_string() ? s["resolution"].get<std::string>() : "";
    if (res != "high" && res != "low" && res != "pending") bad(p + ".resolution", "expected high, low or pending");
    if (!field(s, "starred", p).is_boolean()) bad(p + ".starred", "expected true or false");
}

}  // namespace

RecordedReport parse_decision_report(const json& j) {
    if (!j.is_object()) bad("", "decision record must be an object");
    expect_keys(j, {"format", "version", "strategy", "input", "methods"}, "");
    if (field(j, "format", "") != "doseopt-decision") bad("format", "expected \"doseopt-decision\"");
    if (field(j, "version", "") != kReportVersion) bad("version", "unsupported record version");
    RecordedReport out;
    try {
        out.input = parse_trial_input(field(j, "input", ""));
    } catch (const SchemaError& e) {
        bad("input" + (e.field.empty() ? std::string() : "." + e.field), e.what());
    }
    const std::size_t doses = out.input.arms.size();
    const json& methods = field(j, "methods", "");
    if (!methods.is_array() || methods.empty()) bad("methods", "expected a non-empty array");
    Strategy strategy;
    try {
        strategy = parse_strategy(field(j, "strategy", "").is_string() ? j["strategy"].get<std::string>() : "");
    } catch (const InputError& e) {
        bad("strategy", e.what());
    }
    for (std::size_t i = 0; i < methods.size(); ++i) {
        const json& m = methods[i];
        const std::string p = "methods[" + std::to_string(i) + "]";
        RecordedRun run;
        try {
            run.method = parse_method(field(m, "method", p).is_string() ? m["method"].get<std::string>() : "");
            run.strategy = parse_strategy(field(m, "strategy", p).is_string() ? m["strategy"].get<std::string>() : "");
        } catch (const SchemaError&) {
            throw;
        } catch (const InputError& e) {
            bad(p, e.what());
        }
        if (run.strategy != strategy) bad(p + ".strategy", "differs from the record strategy");
        if (!out.input.has(run.method)) bad(p + ".method", "not configured in the embedded input");
        run.selected = dose_ref(field(m, "selected", p), p + ".selected", doses, true);
        if (!field(m, "pending", p).is_boolean()) bad(p + ".pending", "expected true or false");
        run.pending = m["pending"].get<bool>();
        if (run.pending && run.selected) bad(p + ".pending", "a pending run cannot select a dose");
        check_verdicts(field(m, "admissibility", p), p + ".admissibility", doses);
        if (!field(m, "notes", p).is_array()) bad(p + ".notes", "expected an array");

        if (run.method == Method::Empirical) {
            expect_keys(m, {"method", "strategy", "selected", "pending", "admissibility", "steps", "pairs", "notes"}, p);
            const json& steps = field(m, "steps", p);
            if (!steps.is_array()) bad(p + ".steps", "expected an array");
            for (std::size_t k = 0; k < steps.size(); ++k)
                check_empirical_step(steps[k], p + ".steps[" + std::to_string(k) + "]", doses);
            if (strategy == Strategy::Pairwise) {
                const json& pairs = field(m, "pairs", p);
                if (!pairs.is_array()) bad(p + ".pairs", "expected an array");
                for (std::size_t k = 0; k < pairs.size(); ++k)
                    check_empirical_step(pairs[k], p + ".pairs[" + std::to_string(k) + "]", doses);
            }
        } else if (strategy == Strategy::Sequential) {
            expect_keys(m, {"method", "strategy", "selected", "pending", "admissibility", "desirability", "top_dose",
                            "removed", "skipped", "steps", "notes"}, p);
            dose_ref(field(m, "top_dose", p), p + ".top_dose", doses, true);
            const json& des = field(m, "desirability", p);
            if (!des.is_array() || des.size() != doses) bad(p + ".desirability", "expected one entry per dose");
            for (const char* k : {"removed", "skipped"}) {
                const json& a = field(m, k, p);
                if (!a.is_array()) bad(p + "." + k, "expected an array");
                for (std::size_t q = 0; q < a.size(); ++q)
                    dose_ref(a[q], p + "." + k + "[" + std::to_string(q) + "]", doses, false);
            }
            const json& steps = field(m, "steps", p);
            if (!steps.is_array()) bad(p + ".steps", "expected an array");
            for (std::size_t k = 0; k < steps.size(); ++k)
                run.step_probabilities.push_back(check_comparison(steps[k], p + ".steps[" + std::to_string(k) + "]", doses));
        } else {
            expect_keys(m, {"method", "strategy", "selected", "pending", "admissibility", "top_dose", "pairs",
                            "pending_pair", "notes"}, p);
            dose_ref(field(m, "top_dose", p), p + ".top_dose", doses, true);
            const json& pairs = field(m, "pairs", p);
            if (!pairs.is_array()) bad(p + ".pairs", "expected an array");
            for (std::size_t k = 0; k < pairs.size(); ++k)
                run.step_probabilities.push_back(check_comparison(pairs[k], p + ".pairs[" + std::to_string(k) + "]", doses));
            const json& pp = field(m, "pending_pair", p);
            if (!pp.is_null()) check_comparison(pp, p + ".pending_pair", doses);
            if (pp.is_null() == run.pending) bad(p + ".pending_pair", "must be present exactly when pending");
        }
        out.runs.push_back(std::move(run));
    }
    return out;
}

// ---------------------------------------------------------------- CSV

void write_oc_csv(std::ostream& out, const std::vector<OCReport>& reports, const std::vector<ScenarioSpec>& specs) {
    int k = 0;
    for (const auto& r : reports) k = std::max(k, r.doses);
    out << "scenario,method,truth_mode,replications,true_dose,p_correct,se_correct,p_none";
    for (int d = 1; d <= k; ++d) out << ",p_dose_" << d;
    out << "\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const OCReport& r = reports[i];
        for (const auto& oc : r.methods) {
            out << r.scenario_id << "," << to_string(oc.method) << "," << to_string(specs.at(i).truth_mode) << ","
                << r.replications << "," << (oc.truth ? std::to_string(*oc.truth + 1) : std::string()) << ","
                << fixed6(oc.pct_correct() / 100.0) << "," << fixed6(oc.se_pct_correct() / 100.0) << ","
                << fixed6(oc.none_fraction());
            for (int d = 0; d < k; ++d) out << "," << (d < r.doses ? fixed6(oc.fraction(d)) : std::string());
            out << "\n";
        }
    }
}

std::vector<OCReport> simulate_preset(const TablePreset& preset, std::uint64_t seed, int workers) {
    std::vector<OCReport> out;
    out.reserve(preset.rows.size());
    for (const auto& row : preset.rows)
        out.push_back(operating_characteristics(row.spec, seed, static_cast<std::uint64_t>(row.scenario), workers));
    return out;
}

void write_tables_csv(std::ostream& out, const TablePreset& preset, const std::vector<OCReport>& reports) {
    out << "preset,scenario,regime,method,true_dose,published_true_dose,truth_match,pct_correct,"
           "published_pct_correct,delta_pct,se_pct\n";
    for (std::size_t i = 0; i < preset.rows.size(); ++i) {
        const PresetRow& row = preset.rows[i];
        for (const auto& oc : reports.at(i).methods) {
            const PublishedValue* pub = row.published_for(oc.method);
            out << preset.id << "," << row.scenario << "," << row.regime << "," << to_string(oc.method) << ","
                << (oc.truth ? std::to_string(*oc.truth + 1) : std::string()) << ",";
            if (pub) {
                const bool match = oc.truth && *oc.truth == pub->truth;
                out << pub->truth + 1 << "," << (match ? "yes" : "no") << "," << fixed6(oc.pct_correct()) << ","
                    << fixed6(pub->pct_correct) << "," << fixed6(oc.pct_correct() - pub->pct_correct);
            } else {
                out << ",," << fixed6(oc.pct_correct()) << ",,";
            }
            out << "," << fixed6(oc.se_pct_correct()) << "\n";
        }
    }
}

std::string render_table(const TablePreset& preset, const std::vector<OCReport>& reports) {
    std::ostringstream os;
    os << preset.id << ": " << preset.title << " (n = " << preset.n << ", R = "
       << (reports.empty() ? 0 : reports.front().replications) << ")\n";
    os << "scen  reg  method      true  pub   %correct  published  delta    se\n";
    for (std::size_t i = 0; i < preset.rows.size(); ++i) {
        const PresetRow& row = preset.rows[i];
        for (const auto& oc : reports.at(i).methods) {
            const PublishedValue* pub = row.published_for(oc.method);
            char line[160];
            std::snprintf(line, sizeof line, "%-4d  %-3d  %-10s  %-4s  %-4s  %8.1f  ", row.scenario, row.regime,
                          method_label(oc.method), oc.truth ? std::to_string(*oc.truth + 1).c_str() : "-",
                          pub ? std::to_string(pub->truth + 1).c_str() : "-", oc.pct_correct());
            os << line;
            if (pub) {
                std::snprintf(line, sizeof line, "%9.0f  %+6.1f  %4.1f", pub->pct_correct,
                              oc.pct_correct() - pub->pct_correct, oc.se_pct_correct());
            } else {
                std::snprintf(line, sizeof line, "%9s  %6s  %4.1f", "-", "-", oc.se_pct_correct());
            }
            os << line << "\n";
        }
    }
    return os.str();
}

}  // namespace doseopt
