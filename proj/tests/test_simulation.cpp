#include "doctest.h"

#include <cmath>

#include "doseopt/presets.hpp"
#include "doseopt/simulation.hpp"

using namespace doseopt;

namespace {

ScenarioSpec small_scenario(int reps) {
    ScenarioSpec s;
    s.id = "small";
    s.n = 30;
    s.replications = reps;
    s.doses = {{.13, .23, {}}, {.20, .47, {}}, {.28, .70, {}}};
    s.correlations = {0.3, 0, 0};
    s.utility2 = UtilityTable2{100, 40, 60, 0};
    s.cui = CuiWeights{0.4, 0.6, 0.0};
    return s;
}

void check_equal(const OCReport& a, const OCReport& b) {
    REQUIRE(a.methods.size() == b.methods.size());
    for (std::size_t m = 0; m < a.methods.size(); ++m) {
        CHECK(a.methods[m].counts == b.methods[m].counts);
        CHECK(a.methods[m].none == b.methods[m].none);
    }
}

}  // namespace

TEST_CASE("parallel matches serial for any worker count") {
    const auto s = small_scenario(300);
    const auto ref = simulate_serial(s, 77, 5);
    for (int w : {1, 2, 3, 8}) check_equal(ref, simulate_parallel(s, 77, 5, w));
    check_equal(ref, simulate_serial(s, 77, 5));
}

TEST_CASE("different seeds give different runs") {
    const auto s = small_scenario(300);
    const auto a = simulate_serial(s, 1, 0), b = simulate_serial(s, 2, 0);
    bool differ = false;
    for (std::size_t m = 0; m < a.methods.size(); ++m) differ |= a.methods[m].counts != b.methods[m].counts;
    CHECK(differ);
}

TEST_CASE("selection fractions") {
    const auto one = simulate_serial(small_scenario(1), 3, 0);
    for (const auto& m : one.methods) {
        double total = m.none_fraction();
        for (int d = 0; d < one.doses; ++d) {
            CHECK((m.fraction(d) == 0.0 || m.fraction(d) == 1.0));
            total += m.fraction(d);
        }
        CHECK(total == doctest::Approx(1.0));
    }
    const auto many = simulate_serial(small_scenario(500), 3, 0);
    for (const auto& m : many.methods) {
        double total = m.none_fraction();
        for (int d = 0; d < many.doses; ++d) total += m.fraction(d);
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        const double p = m.pct_correct() / 100.0;
        CHECK(m.se_pct_correct() == doctest::Approx(100.0 * std::sqrt(p * (1 - p) / 500)));
    }
}

TEST_CASE("degenerate scenario selects deterministically") {
    ScenarioSpec s = small_scenario(50);
    s.doses = {{0.0, 0.0, {}}, {0.0, 1.0, {}}};
    s.correlations = {};
    const auto r = simulate_serial(s, 11, 0);
    for (const auto& m : r.methods) {
        CHECK(m.counts[1] == 50);
        CHECK(m.pct_correct() == doctest::Approx(100.0));
    }
}

TEST_CASE("probability cache does not change results") {
    const auto s = small_scenario(40);
    ProbabilityCache cache;
    for (std::uint64_t r = 0; r < 40; ++r) {
        RngStream a(stream_seed(9, 0, r)), b(stream_seed(9, 0, r));
        CHECK(run_replication(s, a, &cache).selected == run_replication(s, b, nullptr).selected);
    }
    CHECK(cache.hits() > 0);
}

TEST_CASE("preset rows carry their regime") {
    const auto t = make_preset("T6", 10);
    CHECK(t.rows.size() == 18);
    for (const auto& r : t.rows) {
        CHECK(r.spec.replications == 10);
        CHECK(r.spec.decision.alpha1 == doctest::Approx(regime(r.regime).alpha1));
    }
    CHECK_THROWS_AS(make_preset("T9"), InputError);
}
