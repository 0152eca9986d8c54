#pragma once

#include "doseopt/quadrature.hpp"

namespace doseopt {

/// Shape pair of a Beta distribution; non-integer shapes are expected since
/// quasi-event counts are fractional.
struct BetaParams {
    double a = 1.0;
    double b = 1.0;

    void validate() const;
    double mean() const { return a / (a + b); }
    bool operator==(const BetaParams&) const = default;
};

/// Posteriors of the standardized metric for the higher and the lower dose.
struct PosteriorPair {
    BetaParams high;
    BetaParams low;
};

/// Conjugate update Beta(a + x, b + n - x). Requires 0 <= x <= n.
BetaParams beta_posterior(const BetaParams& prior, double x, double n);

double beta_cdf(const BetaParams& p, double t);
double beta_pdf(const BetaParams& p, double v);

/// Pr(high - low > phi) style tail of a single Beta: 1 - F(phi).
double tail_prob_greater(const BetaParams& p, double phi);

/// CDF of the difference high - low of two independent Beta variables,
/// F(t) = Pr(high - low <= t), by adaptive quadrature of the convolution
/// integral. Absolute error below 1e-9.
QuadResult diff_cdf_detailed(const PosteriorPair& pair, double t);

/// As diff_cdf_detailed; throws QuadratureError if the tolerance was not met.
double diff_cdf(const PosteriorPair& pair, double t);

/// Pr(high - low > delta) = 1 - diff_cdf(delta).
double prob_diff_greater(const PosteriorPair& pair, double delta);

}  // namespace doseopt
