#include "doctest.h"

#include <cmath>
#include <limits>

#include "doseopt/empirical.hpp"

using namespace doseopt;

namespace {

EmpiricalThresholds thresholds(EmpiricalConsiderPolicy p = EmpiricalConsiderPolicy::Low) {
    EmpiricalThresholds t;
    t.bd1 = 0.1;
    t.consider_policy = p;
    return t;
}

}  // namespace

TEST_CASE("two-endpoint table") {
    const auto t = thresholds();
    CHECK(empirical_cell2(0.40, 1.2, t).cell == EmpiricalCell::High);
    CHECK(empirical_cell2(0.29, 1.53, t).cell == EmpiricalCell::Consider);
    CHECK(resolve(empirical_cell2(0.29, 1.53, t).cell, t.consider_policy) == Resolution::Low);
    CHECK(empirical_cell2(0.10, 2.5, t).cell == EmpiricalCell::Low);
    CHECK(empirical_cell2(0.19, 1.3, t).cell == EmpiricalCell::High);
    const auto star = empirical_cell2(0.10, 1.18, t);
    CHECK(star.cell == EmpiricalCell::Consider);
    CHECK(star.starred);
}

TEST_CASE("three-endpoint table") {
    const auto t = thresholds();
    const auto a = empirical_cell3(0.20, 1.4, 0.2, t);
    CHECK(a.cell == EmpiricalCell::High);
    CHECK(a.biomarker_block);
    const auto b = empirical_cell3(0.10, 1.4, 0.05, t);
    CHECK(b.cell == EmpiricalCell::Consider);
    CHECK(b.starred);
    CHECK_FALSE(b.biomarker_block);
    CHECK(empirical_cell3(0.40, 2.5, 0.05, t).cell == EmpiricalCell::Low);
}

TEST_CASE("boundaries: middle intervals closed, outer bands strict") {
    const auto t = thresholds();
    CHECK(empirical_cell2(0.15, 1.0, t).column == 1);
    CHECK(empirical_cell2(0.35, 1.0, t).column == 1);
    CHECK(empirical_cell2(0.3500001, 1.0, t).column == 0);
    CHECK(empirical_cell2(0.1499999, 1.0, t).column == 2);
    CHECK(empirical_cell2(0.2, 1.5, t).row == 1);
    CHECK(empirical_cell2(0.2, 2.0, t).row == 1);
    CHECK(empirical_cell2(0.2, 2.0000001, t).row == 2);
    CHECK(empirical_cell2(0.2, 1.4999999, t).row == 0);
    // 0.26 / 0.13 is 2 up to rounding and belongs to the closed band.
    CHECK(empirical_cell2(0.2, toxicity_ratio(0.26, 0.13), t).row == 1);
    CHECK_FALSE(empirical_cell3(0.2, 1.0, 0.1, t).biomarker_block);
    CHECK(empirical_cell3(0.2, 1.0, 0.1000001, t).biomarker_block);
}

TEST_CASE("toxicity ratio with zero rates") {
    CHECK(toxicity_ratio(0.2, 0.1) == doctest::Approx(2.0));
    CHECK(std::isinf(toxicity_ratio(0.2, 0.0)));
    CHECK(toxicity_ratio(0.0, 0.0) == 1.0);
    CHECK(empirical_cell2(0.2, toxicity_ratio(0.1, 0.0), thresholds()).row == 2);
}

TEST_CASE("negative efficacy difference policy") {
    auto t = thresholds();
    CHECK(empirical_cell2(-0.07, 1.33, t).cell == EmpiricalCell::Consider);
    t.neg_ed_policy = NegativeEdPolicy::Low;
    CHECK(empirical_cell2(-0.07, 1.33, t).cell == EmpiricalCell::Low);
    // Only the starred cell is affected.
    CHECK(empirical_cell2(0.05, 1.33, t).cell == EmpiricalCell::Consider);
}

TEST_CASE("sequential scan, two-endpoint examples") {
    const auto t = thresholds();
    const std::vector<MarginalRates> s1{{.17, .47, {}}, {.20, .57, {}}, {.26, .76, {}}};
    const auto r1 = empirical_sequential(s1, t);
    REQUIRE(r1.steps.size() == 1);
    CHECK(r1.steps[0].ed == doctest::Approx(0.29));
    CHECK(r1.steps[0].tr == doctest::Approx(1.53).epsilon(0.01));
    CHECK(r1.selected == 0);

    const std::vector<MarginalRates> s2{{.17, .47, {}}, {.20, .67, {}}, {.26, .60, {}}};
    const auto r2 = empirical_sequential(s2, t);
    REQUIRE(r2.steps.size() == 1);
    CHECK(r2.steps[0].high == 2);  // reference stays the highest dose
    CHECK(r2.selected == 0);
}

TEST_CASE("sequential scan, three endpoints") {
    const std::vector<MarginalRates> s{{.17, .47, .25}, {.20, .57, .30}, {.26, .76, .45}};
    const auto r = empirical_sequential(s, thresholds());
    REQUIRE(r.steps.size() == 1);
    CHECK(r.steps[0].cell.cell == EmpiricalCell::Consider);
    CHECK(r.steps[0].cell.biomarker_block);
    CHECK(r.selected == 0);
}

TEST_CASE("policies") {
    const std::vector<MarginalRates> same{{.2, .5, {}}, {.2, .5, {}}};
    CHECK(empirical_sequential(same, thresholds(EmpiricalConsiderPolicy::Low)).selected == 0);
    CHECK(empirical_sequential(same, thresholds(EmpiricalConsiderPolicy::High)).selected == 1);
    const auto rep = empirical_sequential(same, thresholds(EmpiricalConsiderPolicy::Report));
    CHECK_FALSE(rep.selected);
    CHECK(rep.pending);
    CHECK(rep.steps.back().resolution == Resolution::Pending);
}

TEST_CASE("pairwise matrix of the examples") {
    auto t = thresholds(EmpiricalConsiderPolicy::High);
    t.neg_ed_policy = NegativeEdPolicy::Low;
    const std::vector<MarginalRates> s1{{.17, .47, {}}, {.20, .57, {}}, {.26, .76, {}}};
    const auto p1 = empirical_pairwise(s1, t);
    REQUIRE(p1.size() == 3);
    CHECK(p1[0].cell.cell == EmpiricalCell::Consider);  // 1 vs 2
    CHECK(p1[1].cell.cell == EmpiricalCell::Consider);  // 1 vs 3
    CHECK(p1[2].cell.cell == EmpiricalCell::High);      // 2 vs 3
    CHECK(empirical_sequential(s1, t).selected == 2);

    const std::vector<MarginalRates> s2{{.17, .47, {}}, {.20, .67, {}}, {.26, .60, {}}};
    const auto p2 = empirical_pairwise(s2, t);
    CHECK(p2[0].cell.cell == EmpiricalCell::High);
    CHECK(p2[1].cell.cell == EmpiricalCell::Low);
    CHECK(p2[2].cell.cell == EmpiricalCell::Low);
    CHECK(empirical_sequential(s2, t).selected == 0);
}

TEST_CASE("admissibility screen is opt-in") {
    std::vector<ArmData> arms(2);
    arms[0].n = arms[1].n = 30;
    arms[0].toxicities = 3;
    arms[0].responders = 10;
    arms[1].toxicities = 25;  // far above the toxicity limit
    arms[1].responders = 28;
    auto t = thresholds();
    CHECK(empirical_sequential(arms, t, AdmissibilityConfig{}).selected == 0);
    t.consider_policy = EmpiricalConsiderPolicy::High;
    t.screen_admissibility = true;
    const auto r = empirical_sequential(arms, t, AdmissibilityConfig{});
    CHECK(r.selected == 0);
    CHECK(r.steps.empty());
}
