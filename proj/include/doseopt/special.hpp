#pragma once

namespace doseopt {

/// log B(a, b) for a, b > 0.
double log_beta(double a, double b);

/// Beta(a, b) distribution with cached normalization. Shapes may be
/// non-integer; evaluation is accurate to about 1e-14 absolute for
/// shapes up to several hundred.
class BetaDistribution {
   public:
    BetaDistribution(double a, double b);

    double a() const { return a_; }
    double b() const { return b_; }
    double mean() const { return a_ / (a_ + b_); }
    double sd() const;

    /// Density; +infinity at an endpoint whose shape is below 1.
    double pdf(double v) const;
    /// Regularized incomplete beta I_t(a, b).
    double cdf(double t) const;
    /// 1 - cdf(t), evaluated without cancellation.
    double sf(double t) const;

   private:
    // log of x^a (1-x)^b / (a B(a,b)), the continued-fraction prefactor.
    double log_prefactor(double x) const;

    double a_;
    double b_;
    double log_beta_;
    double log_stirling_c_;  // a ln a + b ln b - (a+b) ln(a+b) - ln B(a,b)
};

/// Standard normal CDF.
double norm_cdf(double x);

/// Standard normal quantile, |error| below 1e-14 on (0, 1).
/// Throws std::domain_error outside the open interval.
double inv_norm_cdf(double p);

}  // namespace doseopt
