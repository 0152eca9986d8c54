#include "doctest.h"

#include <cmath>
#include <random>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "doseopt/beta_inference.hpp"
#include "doseopt/utility.hpp"

using namespace doseopt;

namespace {

// Pr(X_high > X_low) for integer a_high, as a finite sum of beta functions.
double closed_form_superiority(const PosteriorPair& p) {
    const double ah = p.high.a, bh = p.high.b, al = p.low.a, bl = p.low.b;
    auto lb = [](double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); };
    double s = 0.0;
    for (int i = 0; i < static_cast<int>(ah); ++i)
        s += std::exp(lb(al + i, bl + bh) - std::log(bh + i) - lb(1.0 + i, bh) - lb(al, bl));
    return s;
}

// Pr(X_high - X_low > t) by composite Simpson over the low density with
// Boost's complementary incomplete beta. Shapes >= 1 keep the integrand smooth.
double simpson_difference(const PosteriorPair& p, double t) {
    boost::math::beta_distribution<double> low(p.low.a, p.low.b);
    const int m = 200000;
    const double lo = std::max(0.0, -t), hi = std::min(1.0, 1.0 - t);
    const double h = (hi - lo) / m;
    auto f = [&](double y) { return boost::math::pdf(low, y) * boost::math::ibetac(p.high.a, p.high.b, y + t); };
    double s = f(lo) + f(hi);
    for (int k = 1; k < m; ++k) s += f(lo + k * h) * (k % 2 ? 4.0 : 2.0);
    double v = s * h / 3.0;
    if (t < 0) v += boost::math::cdf(low, -t);  // low below -t: difference always exceeds t
    return v;
}

double bisect_quantile(const BetaParams& p, double q) {
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (beta_cdf(p, mid) < q ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("posterior update") {
    const BetaParams w = beta_posterior({1, 1}, 18.4, 30);
    CHECK(w.a == doctest::Approx(19.4).epsilon(1e-14));
    CHECK(w.b == doctest::Approx(12.6).epsilon(1e-14));
    CHECK(beta_posterior({1, 1}, 0, 0) == BetaParams{1, 1});
    CHECK(beta_posterior({2, 3}, 5, 10) == BetaParams{7, 8});
    CHECK_THROWS_AS(beta_posterior({1, 1}, 31, 30), InputError);
    CHECK_THROWS_AS(beta_posterior({0, 1}, 1, 3), InputError);
}

TEST_CASE("beta cdf and pdf") {
    CHECK(beta_cdf({1, 1}, 0.3) == doctest::Approx(0.3));
    CHECK(beta_cdf({2, 1}, 0.5) == doctest::Approx(0.25));
    // Independent oracle: Simpson integration of the Boost density.
    boost::math::beta_distribution<double> ref(19.4, 12.6);
    const int m = 100000;
    const double h = 0.6 / m;
    double s = boost::math::pdf(ref, 0.0) + boost::math::pdf(ref, 0.6);
    for (int k = 1; k < m; ++k) s += boost::math::pdf(ref, k * h) * (k % 2 ? 4.0 : 2.0);
    CHECK(beta_cdf({19.4, 12.6}, 0.6) == doctest::Approx(s * h / 3.0).epsilon(1e-10));
    CHECK(beta_pdf({19.4, 12.6}, 0.6) == doctest::Approx(boost::math::pdf(ref, 0.6)).epsilon(1e-11));
    CHECK(beta_pdf({1, 1}, 0.77) == doctest::Approx(1.0));
    CHECK(beta_pdf({2, 2}, 0.5) == doctest::Approx(1.5));
}

TEST_CASE("quantile round trip") {
    std::mt19937_64 g(8);
    std::uniform_real_distribution<double> shape(0.5, 200.0), U(0.001, 0.999);
    for (int i = 0; i < 200; ++i) {
        const BetaParams p{shape(g), shape(g)};
        const double q = U(g);
        CHECK(std::abs(beta_cdf(p, bisect_quantile(p, q)) - q) < 1e-9);
    }
}

TEST_CASE("tail probabilities") {
    CHECK(tail_prob_greater({1, 1}, 0.35) == doctest::Approx(0.65));
    const double p = tail_prob_greater({21, 11}, 0.35);
    CHECK(p == doctest::Approx(boost::math::ibetac(21.0, 11.0, 0.35)).epsilon(1e-12));
    CHECK(p > 0.95);
    CHECK(tail_prob_greater({3, 4}, 1.0) == 0.0);
}

TEST_CASE("difference distribution: closed-form oracle at zero") {
    std::mt19937_64 g(29);
    std::uniform_int_distribution<int> ia(1, 150);
    std::uniform_real_distribution<double> shape(0.5, 200.0);
    for (int i = 0; i < 100; ++i) {
        const PosteriorPair p{{double(ia(g)), shape(g)}, {shape(g), shape(g)}};
        CHECK(std::abs(prob_diff_greater(p, 0.0) - closed_form_superiority(p)) < 1e-8);
    }
}

TEST_CASE("difference distribution: quadrature oracle at nonzero margins") {
    std::mt19937_64 g(31);
    std::uniform_real_distribution<double> shape(1.0, 60.0), margin(-0.3, 0.3);
    for (int i = 0; i < 12; ++i) {
        const PosteriorPair p{{shape(g), shape(g)}, {shape(g), shape(g)}};
        const double t = margin(g);
        CHECK(std::abs(prob_diff_greater(p, t) - simpson_difference(p, t)) < 1e-8);
    }
}

TEST_CASE("difference distribution: shapes below one") {
    // Closed form still applies for integer a_high; the low arm is singular at 0.
    const PosteriorPair p{{1.0, 0.6}, {0.55, 0.7}};
    CHECK(std::abs(prob_diff_greater(p, 0.0) - closed_form_superiority(p)) < 1e-8);
    const PosteriorPair q{{3.0, 0.5}, {0.5, 0.5}};
    CHECK(std::abs(prob_diff_greater(q, 0.0) - closed_form_superiority(q)) < 1e-8);
}

TEST_CASE("difference distribution is a valid cdf") {
    for (const PosteriorPair& p : {PosteriorPair{{23.6, 8.4}, {19.4, 12.6}}, PosteriorPair{{0.6, 0.8}, {2.5, 0.7}},
                                   PosteriorPair{{150, 40}, {3, 90}}}) {
        double prev = -1.0;
        for (int k = 0; k <= 200; ++k) {
            const double t = -1.0 + k * 0.01;
            const double c = diff_cdf(p, t);
            CHECK(c >= prev - 1e-12);
            prev = c;
        }
        CHECK(std::abs(diff_cdf(p, -1.0)) < 1e-8);
        CHECK(std::abs(diff_cdf(p, 1.0) - 1.0) < 1e-8);
    }
}

TEST_CASE("symmetry and swapping") {
    for (const BetaParams& b : {BetaParams{19.4, 12.6}, BetaParams{0.7, 0.9}, BetaParams{120, 3}})
        CHECK(std::abs(prob_diff_greater({b, b}, 0.0) - 0.5) < 1e-8);
    const PosteriorPair p{{23.6, 8.4}, {19.4, 12.6}};
    const PosteriorPair s{p.low, p.high};
    CHECK(std::abs(prob_diff_greater(p, 0.0) + prob_diff_greater(s, 0.0) - 1.0) < 1e-9);
    CHECK(prob_diff_greater(p, -1.0) == doctest::Approx(1.0));
}

TEST_CASE("more high-arm events never lower the probability") {
    const BetaParams low{19.4, 12.6};
    for (double delta : {-0.1, 0.0, 0.05}) {
        double prev = -1.0;
        for (double x = 0; x <= 30.0; x += 0.5) {
            const double p = prob_diff_greater({beta_posterior({1, 1}, x, 30), low}, delta);
            CHECK(p >= prev - 1e-10);
            prev = p;
        }
    }
}

TEST_CASE("worked example posteriors") {
    // Rounded counts of the first example: dose 1 (5 tox, 14 resp), dose 3 (8, 23).
    ArmData d1, d3;
    d1.n = d3.n = 30;
    d1.toxicities = 5;
    d1.responders = 14;
    d3.toxicities = 8;
    d3.responders = 23;
    const UtilityTable2 u{100, 40, 60, 0};
    const PosteriorPair p{beta_posterior({1, 1}, quasi_events2(d3, u), 30), beta_posterior({1, 1}, quasi_events2(d1, u), 30)};
    CHECK(p.low.a == doctest::Approx(19.4).epsilon(1e-14));
    CHECK(p.low.b == doctest::Approx(12.6).epsilon(1e-14));
    CHECK(p.high.a == doctest::Approx(23.6));
    CHECK(prob_diff_greater(p, 0.0) == doctest::Approx(0.870).epsilon(0.03 / 0.870));
    CHECK(prob_diff_greater(p, 0.0) == doctest::Approx(simpson_difference(p, 0.0)).epsilon(1e-8));
}
