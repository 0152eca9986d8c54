#include "doseopt/sampler.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "doseopt/special.hpp"

namespace doseopt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

double latent_cut(double rate, const char* name) {
    if (!(rate >= 0.0 && rate <= 1.0)) {
        std::ostringstream os;
        os << name << " rate " << rate << " outside [0, 1]";
        throw InputError(os.str());
    }
    if (rate == 0.0) return -kInf;
    if (rate == 1.0) return kInf;
    return inv_norm_cdf(rate);
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t stream_seed(std::uint64_t run_seed, std::uint64_t scenario, std::uint64_t replication) {
    std::uint64_t s = run_seed;
    std::uint64_t h = splitmix64(s);
    s = h ^ (scenario * 0xD1B54A32D192ED03ULL);
    h = splitmix64(s);
    s = h ^ (replication * 0x8CB92BA72F3D8DD7ULL);
    return splitmix64(s);
}

RngStream::RngStream(std::uint64_t seed) {
    std::uint64_t state = seed;
    for (auto& w : s_) w = splitmix64(state);
}

std::uint64_t RngStream::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

std::array<std::array<double, 3>, 3> correlation_cholesky(const Correlations& rho) {
    const double r[3][3] = {{1.0, rho.tox_eff, rho.tox_bio},
                            {rho.tox_eff, 1.0, rho.eff_bio},
                            {rho.tox_bio, rho.eff_bio, 1.0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!(std::abs(r[i][j]) <= 1.0)) throw InputError("correlations must lie in [-1, 1]");
    std::array<std::array<double, 3>, 3> l{};
    constexpr double eps = 1e-12;
    for (int j = 0; j < 3; ++j) {
        double d = r[j][j];
        for (int k = 0; k < j; ++k) d -= l[j][k] * l[j][k];
        if (d < -eps) throw InputError("correlation matrix is not positive semidefinite");
        const double pivot = d > eps ? std::sqrt(d) : 0.0;
        l[j][j] = pivot;
        for (int i = j + 1; i < 3; ++i) {
            double s = r[i][j];
            for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
            if (pivot == 0.0) {
                if (std::abs(s) > 1e-9) throw InputError("correlation matrix is not positive semidefinite");
                l[i][j] = 0.0;
            } else {
                l[i][j] = s / pivot;
            }
        }
    }
    return l;
}

ArmSampler::ArmSampler(const MarginalRates& rates, const Correlations& rho)
    : chol_(correlation_cholesky(rho)), three_(rates.biomarker.has_value()) {
    cut_[0] = latent_cut(rates.toxicity, "toxicity");
    cut_[1] = latent_cut(rates.efficacy, "efficacy");
    cut_[2] = three_ ? latent_cut(*rates.biomarker, "biomarker") : 0.0;
}

ArmData ArmSampler::sample(int n, RngStream& rng, std::string label) const {
    if (n < 0) throw InputError("negative sample size");
    Cells8 counts{};
    const int dims = three_ ? 3 : 2;
    for (int i = 0; i < n; ++i) {
        double e[3] = {0.0, 0.0, 0.0};
        for (int k = 0; k < dims; ++k) e[k] = inv_norm_cdf(rng.uniform());
        double z[3] = {0.0, 0.0, 0.0};
        for (int a = 0; a < dims; ++a)
            for (int b = 0; b <= a; ++b) z[a] += chol_[a][b] * e[b];
        const bool tox = z[0] <= cut_[0];
        const bool eff = z[1] <= cut_[1];
        const bool bio = three_ && z[2] <= cut_[2];
        // Cell index k-1: 0 E&!T, 1 !E&!T, 2 E&T, 3 !E&T.
        const int k = (tox ? 2 : 0) + (eff ? 0 : 1);
        counts[bio ? 1 : 0][k] += 1.0;
    }
    ArmData arm;
    arm.label = std::move(label);
    arm.n = n;
    if (three_) {
        arm.cells8 = counts;
    } else {
        arm.cells4 = counts[0];
    }
    arm.toxicities = arm.toxicity_count();
    arm.responders = arm.efficacy_count();
    if (three_) arm.biomarker_positive = arm.biomarker_count();
    return arm;
}

ArmData sample_arm(int n, const MarginalRates& rates, const Correlations& rho, RngStream& rng) {
    return ArmSampler(rates, rho).sample(n, rng);
}

}  // namespace doseopt
