#include "doctest.h"

#include <boost/math/special_functions/beta.hpp>

#include "doseopt/decision.hpp"

using namespace doseopt;

namespace {

const UtilityTable2 kU{100, 40, 60, 0};

ArmData counts(int n, double tox, double eff) {
    ArmData a;
    a.n = n;
    a.toxicities = tox;
    a.responders = eff;
    return a;
}

std::vector<ArmData> from_rates(const std::vector<std::pair<double, double>>& eff_tox) {
    std::vector<ArmData> arms;
    for (const auto& [e, t] : eff_tox)
        arms.push_back(arm_from_rates("", 30, {t, e, std::nullopt}, Reconstruction::Expected));
    return arms;
}

AdmissibilityConfig example_admissibility() {
    AdmissibilityConfig a;
    a.phi_t = 0.22;
    a.phi_e = 0.35;
    return a;
}

DecisionConfig pairwise_config() {
    DecisionConfig c;
    c.strategy = Strategy::Pairwise;
    return c;
}

}  // namespace

TEST_CASE("zones partition the probability line") {
    const DecisionConfig c = pairwise_config();  // C1 = 0.80, C2 = 0.66
    CHECK(zone_of(0.8000001, c) == Zone::SelectHigh);
    CHECK(zone_of(0.80, c) == Zone::ConsiderHigh);
    CHECK(zone_of(0.66, c) == Zone::ConsiderHigh);
    CHECK(zone_of(0.6599999, c) == Zone::SelectLow);
    for (int k = 0; k <= 1000; ++k) {
        const double p = k / 1000.0;
        const Zone z = zone_of(p, c);
        const int fired = (p > c.c1()) + (p < c.c2()) + (p <= c.c1() && p >= c.c2());
        CHECK(fired == 1);
        CHECK((z == Zone::SelectHigh) == (p > c.c1()));
        CHECK((z == Zone::SelectLow) == (p < c.c2()));
    }
    DecisionConfig bad;
    bad.alpha1 = 0.4;
    bad.alpha2 = 0.3;
    CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("admissibility rules") {
    AdmissibilityConfig cfg;  // phi_T 0.35, c_T 0.95, phi_E 0.22, c_E 0.90
    CHECK_FALSE(is_toxic(counts(0, 0, 0), cfg));
    CHECK(is_toxic(counts(30, 20, 15), cfg) == (boost::math::ibetac(21.0, 11.0, 0.35) > 0.95));
    CHECK(is_toxic(counts(30, 20, 15), cfg));
    CHECK_FALSE(is_toxic(counts(30, 0, 15), cfg));

    CHECK_FALSE(is_futile(counts(0, 0, 0), cfg));
    CHECK(is_futile(counts(30, 0, 1), cfg) == (boost::math::ibeta(2.0, 30.0, 0.22) > 0.90));
    CHECK(is_futile(counts(30, 0, 1), cfg));
    CHECK_FALSE(is_futile(counts(30, 0, 30), cfg));

    const auto v = admissible_set({counts(0, 0, 0), counts(0, 0, 0)}, cfg);
    CHECK(v[0].admissible());
    CHECK(v[1].admissible());
    const auto w = admissible_set({counts(30, 3, 12), counts(30, 20, 20), counts(30, 5, 16)}, cfg);
    CHECK(w[0].admissible());
    CHECK_FALSE(w[1].admissible());
    CHECK(w[1].toxic);
    CHECK(w[2].admissible());
}

TEST_CASE("pairwise decisions of the first example") {
    const auto arms = from_rates({{.47, .17}, {.57, .20}, {.76, .26}});
    const DecisionConfig c = pairwise_config();
    const auto m = MetricModel::umet(kU);
    const Decision d13 = pairwise_decision(arms[2], arms[0], m, c);
    CHECK(d13.zone == Zone::SelectHigh);
    CHECK(d13.probability == doctest::Approx(0.870).epsilon(0.03 / 0.87));
    CHECK(d13.observed_difference == doctest::Approx(13.8).epsilon(1.5 / 13.8));
    const Decision d23 = pairwise_decision(arms[2], arms[1], m, c);
    CHECK(d23.zone == Zone::ConsiderHigh);
    CHECK(d23.probability == doctest::Approx(0.773).epsilon(0.03 / 0.773));
    const Decision same = pairwise_decision(arms[0], arms[0], m, c);
    CHECK(same.probability == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(same.zone == Zone::SelectLow);
}

TEST_CASE("desirability ranking") {
    const auto arms = from_rates({{.47, .17}, {.67, .20}, {.60, .26}});
    const DecisionConfig c;
    const auto m = MetricModel::umet(kU);
    CHECK(rank_by_desirability(arms, {0, 1, 2}, m, c) == std::vector<int>{1, 2, 0});
    const auto same = from_rates({{.5, .2}, {.5, .2}, {.5, .2}});
    CHECK(rank_by_desirability(same, {0, 1, 2}, m, c) == std::vector<int>{0, 1, 2});
    CHECK(rank_by_desirability(same, {1}, m, c) == std::vector<int>{1});
}

TEST_CASE("sequential selection, first example") {
    const auto arms = from_rates({{.47, .17}, {.57, .20}, {.76, .26}});
    const auto t = sequential_select(arms, MetricModel::umet(kU), DecisionConfig{}, example_admissibility());
    REQUIRE(t.steps.size() == 2);
    CHECK(t.top_dose == 2);
    CHECK(t.steps[0].low == 0);
    CHECK(t.steps[0].decision.zone == Zone::SelectHigh);
    CHECK(t.steps[1].low == 1);
    CHECK(t.steps[1].decision.zone == Zone::SelectLow);
    CHECK(t.selected == 1);
}

TEST_CASE("sequential selection drops doses ranked below the top dose") {
    const auto arms = from_rates({{.47, .17}, {.67, .20}, {.60, .26}});
    const auto t = sequential_select(arms, MetricModel::umet(kU), DecisionConfig{}, example_admissibility());
    CHECK(t.top_dose == 1);
    CHECK(t.removed == std::vector<int>{2});
    REQUIRE(t.steps.size() == 1);
    CHECK(t.steps[0].decision.probability == doctest::Approx(0.808).epsilon(0.03 / 0.808));
    CHECK(t.selected == 1);
}

TEST_CASE("sequential selection edge cases") {
    const auto one = from_rates({{.5, .2}});
    const auto t = sequential_select(one, MetricModel::umet(kU), DecisionConfig{}, AdmissibilityConfig{});
    CHECK(t.selected == 0);
    CHECK(t.steps.empty());

    // Skips an inadmissible dose below the top dose, selects only admissible doses.
    std::vector<ArmData> arms{counts(30, 3, 1), counts(30, 4, 14), counts(30, 6, 25)};
    const auto s = sequential_select(arms, MetricModel::umet(kU), DecisionConfig{}, AdmissibilityConfig{});
    CHECK(s.skipped == std::vector<int>{0});
    REQUIRE(s.selected.has_value());
    CHECK(s.admissibility[*s.selected].admissible());

    std::vector<ArmData> toxic{counts(30, 25, 20), counts(30, 26, 22)};
    CHECK_FALSE(sequential_select(toxic, MetricModel::umet(kU), DecisionConfig{}, AdmissibilityConfig{}).selected);
}

TEST_CASE("sequential output ignores the consider policy") {
    const auto arms = from_rates({{.30, .10}, {.45, .15}, {.55, .22}, {.62, .25}});
    std::optional<int> first;
    for (auto pol : {ConsiderPolicy::TreatAsLow, ConsiderPolicy::TreatAsHigh, ConsiderPolicy::Report}) {
        DecisionConfig c;
        c.consider_policy = pol;
        const auto t = sequential_select(arms, MetricModel::umet(kU), c, AdmissibilityConfig{});
        if (!first) first = t.selected;
        CHECK(t.selected == first);
        CHECK(t.steps.size() <= arms.size() - 1);
    }
}

TEST_CASE("more responders on the top dose keep it selected") {
    const UtilityTable2 u = kU;
    for (int extra = 0; extra <= 6; ++extra) {
        std::vector<ArmData> arms{counts(30, 4, 12), counts(30, 5, 15), counts(30, 6, double(22 + extra))};
        const auto t = sequential_select(arms, MetricModel::umet(u), DecisionConfig{}, AdmissibilityConfig{});
        if (extra == 0) continue;
        std::vector<ArmData> before{counts(30, 4, 12), counts(30, 5, 15), counts(30, 6, double(21 + extra))};
        const auto b = sequential_select(before, MetricModel::umet(u), DecisionConfig{}, AdmissibilityConfig{});
        if (b.selected == b.top_dose) CHECK(t.selected == t.top_dose);
    }
}

TEST_CASE("U-MET-m and CUI-MET coincide on two endpoints") {
    const auto arms = from_rates({{.47, .17}, {.57, .20}, {.76, .26}});
    const UtilityTable2 u{100, 35, 65, 0};
    const auto a = sequential_select(arms, MetricModel::umet(u), DecisionConfig{}, AdmissibilityConfig{});
    const auto b = sequential_select(arms, MetricModel::cui({0.35, 0.65, 0.0}), DecisionConfig{}, AdmissibilityConfig{});
    CHECK(a.selected == b.selected);
    REQUIRE(a.steps.size() == b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i)
        CHECK(a.steps[i].decision.probability == doctest::Approx(b.steps[i].decision.probability).epsilon(1e-10));
}

TEST_CASE("pairwise matrix and recommendation") {
    const DecisionConfig c = pairwise_config();
    const auto m = MetricModel::umet(kU);
    const auto r1 = pairwise_matrix(from_rates({{.47, .17}, {.57, .20}, {.76, .26}}), m, c, example_admissibility());
    REQUIRE(r1.pairs.size() == 3);
    auto zone = [](const PairwiseResult& r, int lo, int hi) {
        for (const auto& p : r.pairs)
            if (p.low == lo && p.high == hi) return p.decision.zone;
        FAIL("pair missing");
        return Zone::SelectLow;
    };
    CHECK(zone(r1, 0, 2) == Zone::SelectHigh);
    CHECK(zone(r1, 1, 2) == Zone::ConsiderHigh);
    CHECK(zone(r1, 0, 1) == Zone::SelectLow);
    CHECK(r1.recommended == 1);

    DecisionConfig report = c;
    report.consider_policy = ConsiderPolicy::Report;
    const auto r1r = pairwise_matrix(from_rates({{.47, .17}, {.57, .20}, {.76, .26}}), m, report, example_admissibility());
    CHECK_FALSE(r1r.recommended);
    CHECK(r1r.pending.has_value());

    DecisionConfig high = c;
    high.consider_policy = ConsiderPolicy::TreatAsHigh;
    CHECK(pairwise_matrix(from_rates({{.47, .17}, {.57, .20}, {.76, .26}}), m, high, example_admissibility()).recommended == 2);

    const auto r2 = pairwise_matrix(from_rates({{.47, .17}, {.67, .20}, {.60, .26}}), m, c, example_admissibility());
    CHECK(zone(r2, 0, 2) == Zone::SelectLow);
    CHECK(zone(r2, 0, 1) == Zone::SelectHigh);
    CHECK(r2.recommended == 1);

    const auto twin = pairwise_matrix(from_rates({{.5, .2}, {.5, .2}}), m, c, AdmissibilityConfig{});
    CHECK(twin.pairs.front().decision.zone == Zone::SelectLow);
    CHECK(twin.recommended == 0);
}
