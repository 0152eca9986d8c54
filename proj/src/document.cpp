#include "doseopt/document.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace doseopt {

using nlohmann::json;

SchemaError::SchemaError(const std::string& f, const std::string& what)
    : InputError(f.empty() ? what : "field '" + f + "': " + what), field(f) {}

namespace {

std::string join_path(const std::string& base, const std::string& key) { return base.empty() ? key : base + "." + key; }
std::string index_path(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

// Object view that records which keys were read so that leftovers can be
// rejected as unknown fields.
class Node {
   public:
    Node(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw SchemaError(path_, "expected an object");
    }

    const std::string& path() const { return path_; }
    bool has(const std::string& key) const { return j_.contains(key) && !j_.at(key).is_null(); }

    const json& raw(const std::string& key) {
        seen_.insert(key);
        if (!has(key)) throw SchemaError(join_path(path_, key), "required field missing");
        return j_.at(key);
    }

    double number(const std::string& key) {
        const json& v = raw(key);
        if (!v.is_number()) throw SchemaError(join_path(path_, key), "expected a number");
        return v.get<double>();
    }
    double number(const std::string& key, double fallback) { return has(key) ? number(key) : (seen_.insert(key), fallback); }
    std::optional<double> opt_number(const std::string& key) {
        seen_.insert(key);
        return has(key) ? std::optional<double>(number(key)) : std::nullopt;
    }

    int integer(const std::string& key) {
        const json& v = raw(key);
        if (!v.is_number_integer()) throw SchemaError(join_path(path_, key), "expected an integer");
        return v.get<int>();
    }
    int integer(const std::string& key, int fallback) { return has(key) ? integer(key) : (seen_.insert(key), fallback); }

    std::string string(const std::string& key) {
        const json& v = raw(key);
        if (!v.is_string()) throw SchemaError(join_path(path_, key), "expected a string");
        return v.get<std::string>();
    }
    std::string string(const std::string& key, const std::string& fallback) {
        return has(key) ? string(key) : (seen_.insert(key), fallback);
    }

    bool boolean(const std::string& key, bool fallback) {
        seen_.insert(key);
        if (!has(key)) return fallback;
        const json& v = j_.at(key);
        if (!v.is_boolean()) throw SchemaError(join_path(path_, key), "expected true or false");
        return v.get<bool>();
    }

    Node child(const std::string& key) { return Node(raw(key), join_path(path_, key)); }

    const json& array(const std::string& key) {
        const json& v = raw(key);
        if (!v.is_array()) throw SchemaError(join_path(path_, key), "expected an array");
        return v;
    }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!seen_.count(it.key()) && !it->is_null()) throw SchemaError(join_path(path_, it.key()), "unknown field");
    }

   private:
    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

template <typename T>
T rethrow_as_schema(const std::string& path, auto&& fn) {
    try {
        return fn();
    } catch (const SchemaError&) {
        throw;
    } catch (const InputError& e) {
        throw SchemaError(path, e.what());
    }
}

std::array<double, 4> number4(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 4) throw SchemaError(path, "expected an array of 4 numbers");
    std::array<double, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!v[i].is_number()) throw SchemaError(index_path(path, i), "expected a number");
        out[i] = v[i].get<double>();
    }
    return out;
}

UtilityTable2 parse_utility2(Node n) {
    UtilityTable2 u;
    u.u1 = n.number("u1", 100.0);
    u.u2 = n.number("u2");
    u.u3 = n.number("u3");
    u.u4 = n.number("u4", 0.0);
    n.finish();
    rethrow_as_schema<int>(n.path(), [&] { u.validate(); return 0; });
    return u;
}

// Either explicit rows or a base row with additive offsets.
UtilityTable3 parse_utility3(Node n) {
    UtilityTable3 u;
    if (n.has("base")) {
        const Cells4 base = number4(n.raw("base"), join_path(n.path(), "base"));
        OffsetSpec off;
        off.a = number4(n.raw("offsets"), join_path(n.path(), "offsets"));
        if (n.has("override_positive")) {
            const json& o = n.raw("override_positive");
            const std::string p = join_path(n.path(), "override_positive");
            if (!o.is_array() || o.size() != 4) throw SchemaError(p, "expected an array of 4 numbers or nulls");
            for (std::size_t i = 0; i < 4; ++i) {
                if (o[i].is_null()) continue;
                if (!o[i].is_number()) throw SchemaError(index_path(p, i), "expected a number or null");
                off.override_positive[i] = o[i].get<double>();
            }
        } else {
            n.boolean("override_positive", false);
        }
        u = utility3_from_offsets(base, off);
    } else {
        u.u[0] = number4(n.raw("negative"), join_path(n.path(), "negative"));
        u.u[1] = number4(n.raw("positive"), join_path(n.path(), "positive"));
    }
    n.finish();
    rethrow_as_schema<int>(n.path(), [&] { u.validate(); return 0; });
    return u;
}

CuiWeights parse_cui(Node n) {
    CuiWeights w;
    w.toxicity = n.number("toxicity");
    w.efficacy = n.number("efficacy");
    w.biomarker = n.number("biomarker", 0.0);
    n.finish();
    rethrow_as_schema<int>(n.path(), [&] { w.validate(); return 0; });
    return w;
}

BetaParams parse_prior(Node n) {
    BetaParams p{n.number("a"), n.number("b")};
    n.finish();
    rethrow_as_schema<int>(n.path(), [&] { p.validate(); return 0; });
    return p;
}

Ranking parse_ranking(const std::string& s, const std::string& path) {
    if (s == "posterior-mean") return Ranking::PosteriorMean;
    if (s == "observed") return Ranking::Observed;
    throw SchemaError(path, "expected posterior-mean or observed, got '" + s + "'");
}

DecisionConfig parse_decision(Node n) {
    DecisionConfig c;
    c.delta = n.number("delta", c.delta);
    c.alpha1 = n.number("alpha1", c.alpha1);
    c.alpha2 = n.number("alpha2", c.alpha2);
    try {
        c.strategy = parse_strategy(n.string("strategy", to_string(c.strategy)));
    } catch (const InputError& e) {
        throw SchemaError(join_path(n.path(), "strategy"), e.what());
    }
    try {
        c.consider_policy = parse_consider_policy(n.string("consider_policy", to_string(c.consider_policy)));
    } catch (const InputError& e) {
        throw SchemaError(join_path(n.path(), "consider_policy"), e.what());
    }
    c.ranking = parse_ranking(n.string("ranking", to_string(c.ranking)), join_path(n.path(), "ranking"));
    if (n.has("prior")) c.prior = parse_prior(n.child("prior"));
    n.finish();
    rethrow_as_schema<int>(n.path(), [&] { c.validate(); return 0; });
    return c;
}

AdmissibilityConfig parse_admissibility(Node n) {
    AdmissibilityConfig c;
    c.phi_t = n.number("phi_T", c.phi_t);
    c.phi_e = n.number("phi_E", c.phi_e);
    c.c_t = n.number("c_T", c.c_t);
    c.c_e = n.number("c_E", c.c_e);
    c.phi_b = n.opt_number("phi_B");
    c.c_b = n.opt_number("c_B");
    if (n.has("prior")) c.prior = parse_prior(n.child("prior"));
    n.finish();
    rethrow_as_schema<int>(n.path(), [&] { c.validate(); return 0; });
    return c;
}

EmpiricalConsiderPolicy parse_empirical_policy(const std::string& s, const std::string& path) {
    if (s == "low") return EmpiricalConsiderPolicy::Low;
    if (s == "high") return EmpiricalConsiderPolicy::High;
    if (s == "report") return EmpiricalConsiderPolicy::Report;
    throw SchemaError(path, "expected low, high or report, got '" + s + "'");
}

NegativeEdPolicy parse_neg_ed(const std::string& s, const std::string& path) {
    if (s == "consider") return NegativeEdPolicy::Consider;
    if (s == "low") return NegativeEdPolicy::Low;
    throw SchemaError(path, "expected consider or low, got '" + s + "'");
}

EmpiricalThresholds parse_empirical(Node n) {
    EmpiricalThresholds t;
    t.ed1 = n.number("ED1", t.ed1);
    t.ed2 = n.number("ED2", t.ed2);
    t.tr1 = n.number("TR1", t.tr1);
    t.tr2 = n.number("TR2", t.tr2);
    t.bd1 = n.opt_number("BD1");
    t.consider_policy =
        parse_empirical_policy(n.string("consider_policy", to_string(t.consider_policy)), join_path(n.path(), "consider_policy"));
    t.neg_ed_policy = parse_neg_ed(n.string("neg_ed_policy", to_string(t.neg_ed_policy)), join_path(n.path(), "neg_ed_policy"));
    t.screen_admissibility = n.boolean("screen_admissibility", t.screen_admissibility);
    n.finish();
    rethrow_as_schema<int>(n.path(), [&] { t.validate(); return 0; });
    return t;
}

MarginalRates parse_rates(Node n) {
    MarginalRates r;
    r.toxicity = n.number("toxicity");
    r.efficacy = n.number("efficacy");
    r.biomarker = n.opt_number("biomarker");
    n.finish();
    auto check = [&](double p, const char* key) {
        if (!(p >= 0.0 && p <= 1.0)) throw SchemaError(join_path(n.path(), key), "rate outside [0, 1]");
    };
    check(r.toxicity, "toxicity");
    check(r.efficacy, "efficacy");
    if (r.biomarker) check(*r.biomarker, "biomarker");
    return r;
}

Reconstruction parse_reconstruction(const std::string& s, const std::string& path) {
    if (s == "expected") return Reconstruction::Expected;
    if (s == "rounded") return Reconstruction::Rounded;
    throw SchemaError(path, "expected expected or rounded, got '" + s + "'");
}

std::pair<DoseRecord, ArmData> parse_dose(Node n, Reconstruction mode) {
    DoseRecord rec;
    rec.label = n.string("label");
    rec.level = n.integer("level");
    const int size = n.integer("n");
    if (size < 1) throw SchemaError(join_path(n.path(), "n"), "must be a positive integer");

    const int forms = n.has("rates") + n.has("counts") + n.has("cells");
    if (forms != 1) throw SchemaError(n.path(), "exactly one of rates, counts or cells is required");

    ArmData arm;
    if (n.has("rates")) {
        rec.stated_rates = parse_rates(n.child("rates"));
        arm = arm_from_rates(rec.label, size, *rec.stated_rates, mode);
    } else if (n.has("counts")) {
        Node c = n.child("counts");
        arm.label = rec.label;
        arm.n = size;
        arm.toxicities = c.number("toxicities");
        arm.responders = c.number("responders");
        arm.biomarker_positive = c.opt_number("biomarker_positive");
        c.finish();
    } else {
        const json& cells = n.raw("cells");
        const std::string p = join_path(n.path(), "cells");
        arm.label = rec.label;
        arm.n = size;
        if (cells.is_array()) {
            arm.cells4 = number4(cells, p);
        } else {
            Node c(cells, p);
            arm.cells8 = Cells8{number4(c.raw("biomarker_negative"), join_path(p, "biomarker_negative")),
                                number4(c.raw("biomarker_positive"), join_path(p, "biomarker_positive"))};
            c.finish();
        }
    }
    n.finish();
    rethrow_as_schema<int>(n.path(), [&] { arm.validate(); return 0; });
    return {rec, arm};
}

}  // namespace

Strategy parse_strategy(const std::string& s) {
    if (s == "sequential") return Strategy::Sequential;
    if (s == "pairwise") return Strategy::Pairwise;
    throw InputError("expected sequential or pairwise, got '" + s + "'");
}

ConsiderPolicy parse_consider_policy(const std::string& s) {
    if (s == "treat-as-low") return ConsiderPolicy::TreatAsLow;
    if (s == "treat-as-high") return ConsiderPolicy::TreatAsHigh;
    if (s == "report-consider" || s == "report") return ConsiderPolicy::Report;
    throw InputError("expected treat-as-low, treat-as-high or report-consider, got '" + s + "'");
}

const char* to_string(Reconstruction r) { return r == Reconstruction::Expected ? "expected" : "rounded"; }

Method parse_method(const std::string& s) {
    if (s == "umet") return Method::Umet;
    if (s == "cui") return Method::Cui;
    if (s == "empirical") return Method::Empirical;
    throw InputError("expected umet, cui or empirical, got '" + s + "'");
}

bool TrialInputDocument::has(Method m) const {
    switch (m) {
        case Method::Empirical: return true;
        case Method::Umet: return arms.empty() ? false : (arms.front().cells8 ? utility3.has_value() : utility2.has_value() || utility3.has_value());
        case Method::Cui: return cui.has_value();
    }
    return false;
}

MetricModel TrialInputDocument::model(Method m) const {
    if (m == Method::Cui) {
        if (!cui) throw InputError("method cui requested but the document has no cui section");
        return MetricModel::cui(*cui);
    }
    if (m == Method::Umet) {
        if (utility3) return MetricModel::umet(*utility3);
        if (utility2) return MetricModel::umet(*utility2);
        throw InputError("method umet requested but the document has no utility or utility3 section");
    }
    throw InputError("the empirical design has no metric model");
}

json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // Byte offset to line and column.
        const std::size_t at = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(at), '\n');
        const auto nl = text.rfind('\n', at == 0 ? 0 : at - 1);
        const auto col = at - (nl == std::string::npos ? 0 : nl + 1) + 1;
        std::ostringstream msg;
        msg << source << ":" << line << ":" << col << ": JSON syntax error";
        throw SchemaError("", msg.str());
    }
}

namespace {

json read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path.string());
}

}  // namespace

TrialInputDocument parse_trial_input(const json& j) {
    Node root(j, "");
    TrialInputDocument doc;
    doc.title = root.string("title", "");
    doc.reconstruction = parse_reconstruction(root.string("reconstruction", "expected"), "reconstruction");

    const json& doses = root.array("doses");
    if (doses.empty()) throw SchemaError("doses", "at least one dose is required");
    for (std::size_t i = 0; i < doses.size(); ++i) {
        auto [rec, arm] = parse_dose(Node(doses[i], index_path("doses", i)), doc.reconstruction);
        doc.doses.push_back(std::move(rec));
        doc.arms.push_back(std::move(arm));
    }
    // Order by level; the list may be given in any order.
    std::vector<std::size_t> order(doc.doses.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return doc.doses[a].level < doc.doses[b].level; });
    for (std::size_t k = 1; k < order.size(); ++k)
        if (doc.doses[order[k]].level == doc.doses[order[k - 1]].level)
            throw SchemaError(index_path("doses", order[k]) + ".level", "dose levels must be distinct");
    {
        std::vector<DoseRecord> d;
        std::vector<ArmData> a;
        for (std::size_t i : order) {
            d.push_back(doc.doses[i]);
            a.push_back(doc.arms[i]);
        }
        doc.doses = std::move(d);
        doc.arms = std::move(a);
    }

    const bool three = doc.arms.front().cells8.has_value() || doc.arms.front().biomarker_positive.has_value();
    for (std::size_t i = 1; i < doc.arms.size(); ++i) {
        const bool t = doc.arms[i].cells8.has_value() || doc.arms[i].biomarker_positive.has_value();
        if (t != three) throw SchemaError("doses", "either every dose or no dose carries the third endpoint");
    }

    if (root.has("utility") && root.has("utility3"))
        throw SchemaError("utility", "give utility or utility3, not both");
    if (root.has("utility")) doc.utility2 = parse_utility2(root.child("utility"));
    if (root.has("utility3")) doc.utility3 = parse_utility3(root.child("utility3"));
    if (root.has("cui")) doc.cui = parse_cui(root.child("cui"));
    if (doc.utility3 && !three) throw SchemaError("utility3", "requires third-endpoint data for every dose");
    if (doc.utility2 && three) throw SchemaError("utility", "third-endpoint data needs a utility3 table");
    if (doc.cui && doc.cui->uses_biomarker() && !three)
        throw SchemaError("cui.biomarker", "nonzero weight needs third-endpoint data");
    if (doc.utility3 && doc.reconstruction == Reconstruction::Rounded)
        for (std::size_t i = 0; i < doc.arms.size(); ++i)
            if (!doc.arms[i].cells8)
                throw SchemaError(index_path("doses", i), "utility3 needs joint cells; use expected reconstruction or give cells");

    if (root.has("decision")) doc.decision = parse_decision(root.child("decision"));
    if (root.has("admissibility")) doc.admissibility = parse_admissibility(root.child("admissibility"));
    if (root.has("empirical")) doc.empirical = parse_empirical(root.child("empirical"));
    root.finish();
    return doc;
}


TrialInputDocument load_trial_input(const std::filesystem::path& path) { return parse_trial_input(read_file(path)); }

namespace {

json prior_json(const BetaParams& p) { return json{{"a", p.a}, {"b", p.b}}; }

json rates_json(const MarginalRates& r) {
    json j{{"toxicity", r.toxicity}, {"efficacy", r.efficacy}};
    if (r.biomarker) j["biomarker"] = *r.biomarker;
    return j;
}

json utility2_json(const UtilityTable2& u) { return json{{"u1", u.u1}, {"u2", u.u2}, {"u3", u.u3}, {"u4", u.u4}}; }
json utility3_json(const UtilityTable3& u) { return json{{"negative", u.u[0]}, {"positive", u.u[1]}}; }
json cui_json(const CuiWeights& w) {
    return json{{"toxicity", w.toxicity}, {"efficacy", w.efficacy}, {"biomarker", w.biomarker}};
}

}  // namespace

json to_json(const DecisionConfig& c) {
    return json{{"delta", c.delta},
                {"alpha1", c.alpha1},
                {"alpha2", c.alpha2},
                {"strategy", to_string(c.strategy)},
                {"consider_policy", to_string(c.consider_policy)},
                {"ranking", to_string(c.ranking)},
                {"prior", prior_json(c.prior)}};
}

json to_json(const AdmissibilityConfig& c) {
    json j{{"phi_T", c.phi_t}, {"phi_E", c.phi_e}, {"c_T", c.c_t}, {"c_E", c.c_e}, {"prior", prior_json(c.prior)}};
    if (c.phi_b) j["phi_B"] = *c.phi_b;
    if (c.c_b) j["c_B"] = *c.c_b;
    return j;
}

json to_json(const EmpiricalThresholds& t) {
    json j{{"ED1", t.ed1},
           {"ED2", t.ed2},
           {"TR1", t.tr1},
           {"TR2", t.tr2},
           {"consider_policy", to_string(t.consider_policy)},
           {"neg_ed_policy", to_string(t.neg_ed_policy)},
           {"screen_admissibility", t.screen_admissibility}};
    if (t.bd1) j["BD1"] = *t.bd1;
    return j;
}

json to_json(const TrialInputDocument& doc) {
    json doses = json::array();
    for (std::size_t i = 0; i < doc.doses.size(); ++i) {
        const DoseRecord& rec = doc.doses[i];
        const ArmData& arm = doc.arms[i];
        json d{{"label", rec.label}, {"level", rec.level}, {"n", arm.n}};
        if (rec.stated_rates) {
            d["rates"] = rates_json(*rec.stated_rates);
        } else if (arm.cells8) {
            d["cells"] = json{{"biomarker_negative", (*arm.cells8)[0]}, {"biomarker_positive", (*arm.cells8)[1]}};
        } else if (arm.cells4) {
            d["cells"] = *arm.cells4;
        } else {
            json c{{"toxicities", *arm.toxicities}, {"responders", *arm.responders}};
            if (arm.biomarker_positive) c["biomarker_positive"] = *arm.biomarker_positive;
            d["counts"] = c;
        }
        doses.push_back(d);
    }
    json j{{"title", doc.title},
           {"reconstruction", to_string(doc.reconstruction)},
           {"doses", doses},
           {"decision", to_json(doc.decision)},
           {"admissibility", to_json(doc.admissibility)},
           {"empirical", to_json(doc.empirical)}};
    if (doc.utility2) j["utility"] = utility2_json(*doc.utility2);
    if (doc.utility3) j["utility3"] = utility3_json(*doc.utility3);
    if (doc.cui) j["cui"] = cui_json(*doc.cui);
    return j;
}

namespace {

Correlations parse_correlations(Node n) {
    Correlations r;
    r.tox_eff = n.number("tox_eff", 0.0);
    r.tox_bio = n.number("tox_bio", 0.0);
    r.eff_bio = n.number("eff_bio", 0.0);
    n.finish();
    rethrow_as_schema<int>(n.path(), [&] { correlation_cholesky(r); return 0; });
    return r;
}

void parse_truth(Node n, ScenarioSpec& s) {
    const std::string mode = n.string("mode", to_string(s.truth_mode));
    if (mode == "binomial") s.truth_mode = TruthMode::BinomialTest;
    else if (mode == "per-method") s.truth_mode = TruthMode::PerMethod;
    else throw SchemaError(join_path(n.path(), "mode"), "expected binomial or per-method, got '" + mode + "'");
    const std::string rule = n.string("rule", "expected-posterior");
    if (rule == "expected-posterior") s.truth_rule = UtilityTruthRule::ExpectedPosterior;
    else if (rule == "plug-in") s.truth_rule = UtilityTruthRule::PlugIn;
    else throw SchemaError(join_path(n.path(), "rule"), "expected expected-posterior or plug-in, got '" + rule + "'");
    s.truth_delta = n.number("delta", s.truth_delta);
    s.binomial_alpha = n.number("binomial_alpha", s.binomial_alpha);
    s.binomial_tox_gate = n.boolean("tox_gate", s.binomial_tox_gate);
    n.finish();
}

ScenarioSpec parse_scenario(Node n) {
    ScenarioSpec s;
    s.id = n.string("id");
    s.n = n.integer("n", s.n);
    s.replications = n.integer("replications", s.replications);
    const json& doses = n.array("doses");
    const std::string dp = join_path(n.path(), "doses");
    for (std::size_t i = 0; i < doses.size(); ++i) s.doses.push_back(parse_rates(Node(doses[i], index_path(dp, i))));
    if (n.has("correlations")) s.correlations = parse_correlations(n.child("correlations"));
    if (n.has("utility")) s.utility2 = parse_utility2(n.child("utility"));
    if (n.has("utility3")) s.utility3 = parse_utility3(n.child("utility3"));
    if (n.has("cui")) s.cui = parse_cui(n.child("cui"));
    if (n.has("decision")) s.decision = parse_decision(n.child("decision"));
    if (n.has("admissibility")) s.admissibility = parse_admissibility(n.child("admissibility"));
    if (n.has("empirical")) s.empirical = parse_empirical(n.child("empirical"));
    if (n.has("truth")) parse_truth(n.child("truth"), s);
    n.finish();
    rethrow_as_schema<int>(n.path(), [&] { s.validate(); return 0; });
    return s;
}

}  // namespace

ScenarioSuiteDocument parse_suite(const json& j) {
    Node root(j, "");
    ScenarioSuiteDocument suite;
    if (root.has("presets")) {
        const json& p = root.array("presets");
        const auto valid = preset_ids();
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!p[i].is_string()) throw SchemaError(index_path("presets", i), "expected a preset id");
            const std::string id = p[i].get<std::string>();
            if (std::find(valid.begin(), valid.end(), id) == valid.end()) {
                std::string list;
                for (const auto& v : valid) list += (list.empty() ? "" : ", ") + v;
                throw SchemaError(index_path("presets", i), "unknown preset '" + id + "'; valid presets: " + list);
            }
            suite.presets.push_back(id);
        }
    }
    if (root.has("scenarios")) {
        const json& sc = root.array("scenarios");
        for (std::size_t i = 0; i < sc.size(); ++i)
            suite.scenarios.push_back(parse_scenario(Node(sc[i], index_path("scenarios", i))));
    }
    root.finish();
    if (suite.presets.empty() && suite.scenarios.empty())
        throw SchemaError("", "suite lists no presets and no scenarios");
    std::set<std::string> ids;
    for (std::size_t i = 0; i < suite.scenarios.size(); ++i)
        if (!ids.insert(suite.scenarios[i].id).second)
            throw SchemaError(index_path("scenarios", i) + ".id", "duplicate scenario id");
    return suite;
}

ScenarioSuiteDocument load_suite(const std::filesystem::path& path) { return parse_suite(read_file(path)); }

}  // namespace doseopt
