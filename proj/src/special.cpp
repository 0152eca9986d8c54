#include "doseopt/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace doseopt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kStirlingCutoff = 10.0;

// Stirling remainder: lgamma(x) - [(x - 1/2) ln x - x + ln(2 pi) / 2], x >= 10.
double stirling_delta(double x) {
    const double r = 1.0 / x;
    const double r2 = r * r;
    return r *
           (1.0 / 12.0 +
            r2 * (-1.0 / 360.0 +
                  r2 * (1.0 / 1260.0 +
                        r2 * (-1.0 / 1680.0 +
                              r2 * (1.0 / 1188.0 +
                                    r2 * (-691.0 / 360360.0 + r2 * (1.0 / 156.0)))))));
}

// a ln a + b ln b - (a+b) ln(a+b) - ln B(a, b), evaluated without the
// large cancellations of the naive lgamma form.
double stirling_c(double a, double b) {
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    if (lo >= kStirlingCutoff) {
        return 0.5 * (std::log(a) + std::log(b) - std::log(a + b) - std::log(2.0 * std::numbers::pi)) -
               stirling_delta(a) - stirling_delta(b) + stirling_delta(a + b);
    }
    if (hi >= kStirlingCutoff) {
        return lo * std::log(lo) - std::lgamma(lo) - lo - 0.5 * std::log1p(lo / hi) +
               stirling_delta(lo + hi) - stirling_delta(hi);
    }
    return a * std::log(a) + b * std::log(b) - (a + b) * std::log(a + b) - log_beta(a, b);
}

// Modified Lentz evaluation of the incomplete-beta continued fraction.
double beta_continued_fraction(double a, double b, double x) {
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-16;
    constexpr int max_iter = 10000;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) return h;
    }
    throw std::runtime_error("incomplete beta continued fraction did not converge");
}

}  // namespace

double log_beta(double a, double b) {
    if (!(a > 0.0 && b > 0.0)) throw std::domain_error("log_beta: shapes must be positive");
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

BetaDistribution::BetaDistribution(double a, double b) : a_(a), b_(b) {
    if (!(a > 0.0 && b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw std::domain_error("Beta shapes must be positive and finite");
    log_beta_ = log_beta(a, b);
    log_stirling_c_ = stirling_c(a, b);
}

double BetaDistribution::sd() const {
    const double s = a_ + b_;
    return std::sqrt(a_ * b_ / (s * s * (s + 1.0)));
}

// a ln x + b ln(1-x) - ln B(a,b), centred on the mode of x^a (1-x)^b.
double BetaDistribution::log_prefactor(double x) const {
    const double s = a_ + b_;
    const double x0 = a_ / s;
    const double y0 = b_ / s;
    return a_ * std::log1p((x - x0) / x0) + b_ * std::log1p((x0 - x) / y0) + log_stirling_c_;
}

double BetaDistribution::pdf(double v) const {
    if (v < 0.0 || v > 1.0) return 0.0;
    if (v == 0.0) {
        if (a_ < 1.0) return kInf;
        return a_ == 1.0 ? std::exp(-log_beta_) : 0.0;
    }
    if (v == 1.0) {
        if (b_ < 1.0) return kInf;
        return b_ == 1.0 ? std::exp(-log_beta_) : 0.0;
    }
    return std::exp(log_prefactor(v)) / (v * (1.0 - v));
}

double BetaDistribution::cdf(double t) const {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double lp = log_prefactor(t);
    if (t < (a_ + 1.0) / (a_ + b_ + 2.0))
        return std::exp(lp - std::log(a_)) * beta_continued_fraction(a_, b_, t);
    return 1.0 - std::exp(lp - std::log(b_)) * beta_continued_fraction(b_, a_, 1.0 - t);
}

double BetaDistribution::sf(double t) const {
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    const double lp = log_prefactor(t);
    if (t < (a_ + 1.0) / (a_ + b_ + 2.0))
        return 1.0 - std::exp(lp - std::log(a_)) * beta_continued_fraction(a_, b_, t);
    return std::exp(lp - std::log(b_)) * beta_continued_fraction(b_, a_, 1.0 - t);
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double inv_norm_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("inv_norm_cdf: p must lie in (0, 1)");
    if (p == 0.5) return 0.0;
    // Work in the lower tail, then reflect.
    const bool upper = p > 0.5;
    const double q = upper ? 1.0 - p : p;
    const double t = std::sqrt(-2.0 * std::log(q));
    double z = -(t - (2.515517 + t * (0.802853 + t * 0.010328)) /
                         (1.0 + t * (1.432788 + t * (0.189269 + t * 0.001308))));
    const double sqrt_2pi = std::sqrt(2.0 * std::numbers::pi);
    for (int iter = 0; iter < 4; ++iter) {
        const double e = 0.5 * std::erfc(-z / std::numbers::sqrt2) - q;
        const double u = e * sqrt_2pi * std::exp(0.5 * z * z);
        const double step = u / (1.0 + 0.5 * z * u);
        z -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    return upper ? -z : z;
}

}  // namespace doseopt
