#include "doctest.h"

#include <cmath>

#include <boost/math/distributions/normal.hpp>

#include "doseopt/presets.hpp"
#include "doseopt/truth.hpp"

using namespace doseopt;

namespace {

const PresetRow& row(const TablePreset& t, int scenario, int reg) {
    for (const auto& r : t.rows)
        if (r.scenario == scenario && r.regime == reg) return r;
    FAIL("row missing");
    return t.rows.front();
}

}  // namespace

TEST_CASE("two-proportion test against a normal-tail oracle") {
    // Continuity-corrected z statistic, correction 1/2 per arm on the count scale.
    const int n = 40;
    const double p1 = 0.55, p0 = 0.40;
    const double pool = (p1 + p0) / 2;
    const double z = ((p1 - p0) * n - 1.0) / std::sqrt(2.0 * n * pool * (1 - pool));
    const double oracle = boost::math::cdf(boost::math::complement(boost::math::normal(), z));
    CHECK(two_proportion_p_value(p1, p0, n) == doctest::Approx(oracle).epsilon(1e-10));
    CHECK(two_proportion_p_value(0.4, 0.4, n) > 0.5);
    CHECK(classify_difference(0.1) == DifferenceClass::Difference);
    CHECK(classify_difference(0.3) == DifferenceClass::Borderline);
    CHECK(classify_difference(0.5) == DifferenceClass::None);
}

TEST_CASE("binomial truth of the shared-truth table") {
    const auto t = make_preset("T5", 10);
    CHECK(truth_for(row(t, 1, 1).spec, Method::Umet) == 3);
    CHECK(truth_for(row(t, 3, 1).spec, Method::Empirical) == 2);
    CHECK(truth_for(row(t, 4, 1).spec, Method::Umet) == 1);
}

TEST_CASE("per-method truths") {
    const auto t = make_preset("T6", 10);
    CHECK(truth_for(row(t, 4, 1).spec, Method::Empirical) == 2);
    CHECK(truth_for(row(t, 4, 1).spec, Method::Umet) == 2);
    CHECK(truth_for(row(t, 8, 1).spec, Method::Empirical) == 0);
    CHECK(truth_for(row(t, 8, 1).spec, Method::Umet) == 1);
    CHECK(truth_for(row(t, 9, 2).spec, Method::Empirical) == 2);
}

TEST_CASE("every preset truth matches its published column") {
    for (const auto& id : preset_ids()) {
        const auto t = make_preset(id, 10);
        for (const auto& r : t.rows)
            for (const auto& pv : r.published) {
                INFO(r.spec.id << " " << to_string(pv.method));
                CHECK(truth_for(r.spec, pv.method) == pv.truth);
            }
    }
}

TEST_CASE("identical doses resolve to the lowest") {
    ScenarioSpec s;
    s.id = "flat";
    s.doses = {{.2, .5, {}}, {.2, .5, {}}, {.2, .5, {}}};
    s.utility2 = UtilityTable2{100, 40, 60, 0};
    CHECK(truth_utility(s, Method::Umet) == 0);
    CHECK(truth_empirical(s) == 0);
    s.truth_mode = TruthMode::BinomialTest;
    CHECK(truth_binomial_test(s, 0.2).selected == 0);
}

TEST_CASE("expected arms carry n times the cell probabilities") {
    ScenarioSpec s;
    s.n = 30;
    s.doses = {{.2, .5, {}}};
    s.utility2 = UtilityTable2{100, 40, 60, 0};
    const auto a = expected_arms(s);
    REQUIRE(a.size() == 1);
    CHECK(*a[0].toxicity_count() == doctest::Approx(6.0));
    CHECK(*a[0].efficacy_count() == doctest::Approx(15.0));
}
