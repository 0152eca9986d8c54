#include "doseopt/beta_inference.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "doseopt/special.hpp"
#include "doseopt/utility.hpp"

namespace doseopt {

namespace {

constexpr double kDiffAbsTol = 1e-10;

// Integrates g over [lo, hi] where g may carry an integrable power-law
// singularity (exponent shape - 1) at lo: v = lo + w s^m, m = 2 / shape.
QuadResult integrate_left_singular(const std::function<double(double)>& g, double lo, double hi,
                                   double shape, const QuadOptions& opts) {
    const double m = 2.0 / shape;
    const double w = hi - lo;
    auto h = [&](double s) {
        const double sm1 = std::pow(s, m - 1.0);
        return g(lo + w * sm1 * s) * w * m * sm1;
    };
    return integrate_adaptive(h, 0.0, 1.0, {}, opts);
}

QuadResult integrate_right_singular(const std::function<double(double)>& g, double lo, double hi,
                                    double shape, const QuadOptions& opts) {
    const double m = 2.0 / shape;
    const double w = hi - lo;
    auto h = [&](double s) {
        const double sm1 = std::pow(s, m - 1.0);
        return g(hi - w * sm1 * s) * w * m * sm1;
    };
    return integrate_adaptive(h, 0.0, 1.0, {}, opts);
}

void accumulate(QuadResult& into, const QuadResult& part) {
    into.value += part.value;
    into.abs_error += part.abs_error;
    into.evaluations += part.evaluations;
    into.converged = into.converged && part.converged;
}

}  // namespace

void BetaParams::validate() const {
    if (!(a > 0.0 && b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        std::ostringstream os;
        os << "invalid Beta shapes (" << a << ", " << b << ")";
        throw InputError(os.str());
    }
}

BetaParams beta_posterior(const BetaParams& prior, double x, double n) {
    prior.validate();
    if (!(x >= -kCountTolerance && x <= n + kCountTolerance)) {
        std::ostringstream os;
        os << "quasi-events x = " << x << " outside [0, " << n << "]";
        throw InputError(os.str());
    }
    x = std::clamp(x, 0.0, n);
    return {prior.a + x, prior.b + n - x};
}

double beta_cdf(const BetaParams& p, double t) { return BetaDistribution(p.a, p.b).cdf(t); }

double beta_pdf(const BetaParams& p, double v) { return BetaDistribution(p.a, p.b).pdf(v); }

double tail_prob_greater(const BetaParams& p, double phi) {
    if (!(phi >= 0.0 && phi <= 1.0)) throw InputError("threshold outside [0, 1]");
    return BetaDistribution(p.a, p.b).sf(phi);
}

QuadResult diff_cdf_detailed(const PosteriorPair& pair, double t) {
    pair.high.validate();
    pair.low.validate();
    QuadResult out;
    out.converged = true;
    if (t <= -1.0) return out;
    if (t >= 1.0) {
        out.value = 1.0;
        return out;
    }
    const BetaDistribution high(pair.high.a, pair.high.b);
    const BetaDistribution low(pair.low.a, pair.low.b);
    const double lo = std::max(0.0, -t);
    const double hi = std::min(1.0, 1.0 - t);

    // F_high(t + v) f_low(v): the mass of f_low and the rise of F_high(t + .)
    // are where the integrand varies; seed breakpoints around both.
    std::function<double(double)> g = [&](double v) { return high.cdf(t + v) * low.pdf(v); };
    std::vector<double> cuts;
    for (double k : {-6.0, -3.0, -1.0, 0.0, 1.0, 3.0, 6.0}) {
        cuts.push_back(low.mean() + k * low.sd());
        cuts.push_back(high.mean() - t + k * high.sd());
    }
    std::erase_if(cuts, [&](double c) { return !(c > lo && c < hi); });
    std::sort(cuts.begin(), cuts.end());

    const bool left_singular = lo == 0.0 && low.a() < 1.0;
    const bool right_singular = hi == 1.0 && low.b() < 1.0;
    QuadOptions opts;
    opts.abs_tol = kDiffAbsTol / 3.0;

    double inner_lo = lo;
    double inner_hi = hi;
    if (left_singular) {
        inner_lo = cuts.empty() ? 0.5 * (lo + hi) : cuts.front();
        accumulate(out, integrate_left_singular(g, lo, inner_lo, low.a(), opts));
    }
    if (right_singular) {
        inner_hi = cuts.empty() ? 0.5 * (inner_lo + hi) : std::max(cuts.back(), inner_lo);
        if (inner_hi <= inner_lo) inner_hi = 0.5 * (inner_lo + hi);
        accumulate(out, integrate_right_singular(g, inner_hi, hi, low.b(), opts));
    }
    accumulate(out, integrate_adaptive(g, inner_lo, inner_hi, cuts, opts));

    if (t > 0.0) out.value += low.sf(1.0 - t);
    out.value = std::clamp(out.value, 0.0, 1.0);
    return out;
}

double diff_cdf(const PosteriorPair& pair, double t) {
    const QuadResult r = diff_cdf_detailed(pair, t);
    if (!r.converged) {
        std::ostringstream os;
        os << "difference-CDF quadrature did not converge (estimated error " << r.abs_error << ")";
        throw QuadratureError(os.str(), r.abs_error);
    }
    return r.value;
}

double prob_diff_greater(const PosteriorPair& pair, double delta) {
    if (!(delta >= -1.0 && delta <= 1.0)) throw InputError("delta outside [-1, 1]");
    return 1.0 - diff_cdf(pair, delta);
}

}  // namespace doseopt
