#pragma once

#include <array>
#include <cstdint>

#include "doseopt/utility.hpp"

namespace doseopt {

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed of the stream for one (scenario, replication) cell of a run. Pure
/// function of its arguments, so any worker can regenerate any stream.
std::uint64_t stream_seed(std::uint64_t run_seed, std::uint64_t scenario, std::uint64_t replication);

/// xoshiro256** generator with an explicit uniform conversion, so draws are
/// bit-identical across standard libraries.
class RngStream {
   public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t next();
    /// Uniform on the open interval (0, 1): ((x >> 11) + 0.5) * 2^-53.
    double uniform();

   private:
    std::array<std::uint64_t, 4> s_{};
};

struct Correlations {
    double tox_eff = 0.0;
    double tox_bio = 0.0;
    double eff_bio = 0.0;

    bool is_zero() const { return tox_eff == 0.0 && tox_bio == 0.0 && eff_bio == 0.0; }
};

/// Lower Cholesky factor of the latent correlation matrix over
/// (toxicity, efficacy, biomarker). Semidefinite matrices are accepted;
/// anything with a negative pivot beyond rounding throws InputError.
std::array<std::array<double, 3>, 3> correlation_cholesky(const Correlations& rho);

/// Gaussian-copula sampler for one arm: latent normals with the given
/// correlations, each thresholded at inv_norm_cdf(rate).
class ArmSampler {
   public:
    ArmSampler(const MarginalRates& rates, const Correlations& rho);

    /// Draws n subjects and tallies joint cells (8 cells when a biomarker
    /// rate is present, else 4) and the implied marginals.
    ArmData sample(int n, RngStream& rng, std::string label = {}) const;

   private:
    std::array<std::array<double, 3>, 3> chol_{};
    std::array<double, 3> cut_{};  // tox, eff, bio thresholds on the latent scale
    bool three_ = false;
};

ArmData sample_arm(int n, const MarginalRates& rates, const Correlations& rho, RngStream& rng);

}  // namespace doseopt
