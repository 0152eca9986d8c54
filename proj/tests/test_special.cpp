#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "doseopt/quadrature.hpp"
#include "doseopt/special.hpp"

using namespace doseopt;

TEST_CASE("log_beta against lgamma") {
    for (double a : {0.5, 1.0, 3.7, 19.4, 150.0})
        for (double b : {0.5, 2.0, 12.6, 199.0})
            CHECK(log_beta(a, b) == doctest::Approx(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)).epsilon(1e-12));
}

TEST_CASE("regularized incomplete beta against Boost") {
    std::mt19937_64 g(17);
    std::uniform_real_distribution<double> shape(0.5, 200.0), x(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 3000; ++i) {
        const double a = shape(g), b = shape(g), t = x(g);
        const BetaDistribution d(a, b);
        worst = std::max(worst, std::abs(d.cdf(t) - boost::math::ibeta(a, b, t)));
        worst = std::max(worst, std::abs(d.sf(t) - boost::math::ibetac(a, b, t)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("density against Boost") {
    for (double a : {0.6, 1.0, 2.0, 19.4, 120.0})
        for (double b : {0.7, 1.0, 12.6, 80.0})
            for (double v : {0.01, 0.3, 0.6, 0.97}) {
                boost::math::beta_distribution<double> ref(a, b);
                CHECK(BetaDistribution(a, b).pdf(v) == doctest::Approx(boost::math::pdf(ref, v)).epsilon(1e-11));
            }
    CHECK(BetaDistribution(1, 1).pdf(0.42) == doctest::Approx(1.0));
    CHECK(BetaDistribution(2, 2).pdf(0.5) == doctest::Approx(1.5));
}

TEST_CASE("normal quantile") {
    CHECK(inv_norm_cdf(0.5) == doctest::Approx(0.0));
    CHECK(inv_norm_cdf(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
    boost::math::normal ref;
    std::mt19937_64 g(23);
    std::uniform_real_distribution<double> U(1e-12, 1.0 - 1e-12);
    double worst = 0.0, worst_round = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double p = U(g);
        worst = std::max(worst, std::abs(inv_norm_cdf(p) - boost::math::quantile(ref, p)));
        worst_round = std::max(worst_round, std::abs(norm_cdf(inv_norm_cdf(p)) - p));
    }
    CHECK(worst < 1e-10);
    CHECK(worst_round < 1e-14);
    for (double p : {1e-300, 1e-20, 1 - 1e-15})
        CHECK(inv_norm_cdf(p) == doctest::Approx(boost::math::quantile(ref, p)).epsilon(1e-10));
    CHECK_THROWS(inv_norm_cdf(0.0));
    CHECK_THROWS(inv_norm_cdf(1.0));
}

TEST_CASE("adaptive quadrature") {
    using std::numbers::pi;
    auto r = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, pi);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));

    // Integrable endpoint singularity.
    r = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));

    // Sharp peak located by a breakpoint.
    const std::vector<double> bp{0.7};
    r = integrate_adaptive([](double x) { return std::exp(-1e4 * (x - 0.7) * (x - 0.7)); }, 0.0, 1.0, bp);
    CHECK(r.value == doctest::Approx(std::sqrt(pi / 1e4)).epsilon(1e-10));

    // Beta(19.4, 12.6) density integrates to one.
    const BetaDistribution d(19.4, 12.6);
    r = integrate_adaptive([&](double v) { return d.pdf(v); }, 0.0, 1.0);
    CHECK(std::abs(r.value - 1.0) < 1e-10);
}
