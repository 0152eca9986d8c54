#include "doctest.h"

#include <cmath>
#include <numbers>
#include <set>

#include "doseopt/sampler.hpp"

using namespace doseopt;

TEST_CASE("stream seeds are distinct and stable") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t s = 0; s < 4; ++s)
        for (std::uint64_t i = 0; i < 10; ++i)
            for (std::uint64_t r = 0; r < 100; ++r) seen.insert(stream_seed(s, i, r));
    CHECK(seen.size() == 4000);
    CHECK(stream_seed(1, 2, 3) == stream_seed(1, 2, 3));
}

TEST_CASE("uniforms lie strictly inside the unit interval") {
    RngStream rng(stream_seed(9, 0, 0));
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform();
        CHECK_FALSE((u <= 0.0 || u >= 1.0));
        sum += u;
    }
    CHECK(std::abs(sum / 100000 - 0.5) < 4 * std::sqrt(1.0 / 12.0 / 100000));
}

TEST_CASE("independent joint cells") {
    RngStream rng(stream_seed(1, 0, 0));
    const int n = 100000;
    const ArmData a = sample_arm(n, {0.13, 0.40, {}}, {}, rng);
    REQUIRE(a.cells4.has_value());
    const double target = 0.40 * 0.87;
    const double se = std::sqrt(target * (1 - target) / n);
    CHECK(std::abs((*a.cells4)[0] / n - target) < 4 * se);
    CHECK(*a.toxicity_count() == (*a.cells4)[2] + (*a.cells4)[3]);
}

TEST_CASE("degenerate rates") {
    RngStream rng(stream_seed(2, 0, 0));
    const ArmData a = sample_arm(50, {0.0, 1.0, {}}, {0.5, 0, 0}, rng);
    CHECK(*a.responders == 50);
    CHECK(*a.toxicities == 0);
    const ArmData b = sample_arm(50, {1.0, 0.0, 1.0}, {}, rng);
    CHECK(*b.toxicities == 50);
    CHECK(*b.responders == 0);
    CHECK(*b.biomarker_positive == 50);
}

TEST_CASE("correlated latent orthant") {
    RngStream rng(stream_seed(3, 0, 0));
    const int n = 200000;
    const ArmData a = sample_arm(n, {0.5, 0.5, {}}, {0.5, 0, 0}, rng);
    const double target = 0.25 + std::asin(0.5) / (2 * std::numbers::pi);
    CHECK(std::abs((*a.cells4)[2] / n - target) < 4 * std::sqrt(target * (1 - target) / n));
}

TEST_CASE("correlation matrix checks") {
    CHECK_NOTHROW(correlation_cholesky({0.3, 0.2, 0.1}));
    CHECK_NOTHROW(correlation_cholesky({1.0, 1.0, 1.0}));  // semidefinite
    CHECK_THROWS_AS(correlation_cholesky({0.9, 0.9, -0.9}), InputError);
    CHECK_THROWS_AS(correlation_cholesky({1.2, 0, 0}), InputError);
}
