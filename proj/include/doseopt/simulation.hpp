#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "doseopt/scenario.hpp"

namespace doseopt {

/// Memo of Pr(high - low > delta) keyed by the exact shape bits. Sampled
/// counts are integers, so the same posterior pairs recur many times within
/// a scenario. Not thread-safe: one instance per worker.
class ProbabilityCache {
   public:
    double operator()(const PosteriorPair& pair, double delta);
    std::size_t size() const { return memo_.size(); }
    std::uint64_t hits() const { return hits_; }

   private:
    struct Key {
        std::array<std::uint64_t, 5> bits;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };
    std::unordered_map<Key, double, KeyHash> memo_;
    std::uint64_t hits_ = 0;
};

inline constexpr int kNoDose = -1;

/// Selected dose index per method (indexed by Method), kNoDose when a
/// method selects nothing or is not run.
struct ReplicationOutcome {
    std::array<int, 3> selected{kNoDose, kNoDose, kNoDose};
};

/// Pre-built per-dose samplers of a scenario.
class ScenarioSampler {
   public:
    explicit ScenarioSampler(const ScenarioSpec& spec);
    std::vector<ArmData> sample(RngStream& rng) const;

   private:
    const ScenarioSpec* spec_;
    std::vector<ArmSampler> arms_;
};

/// Samples every arm from the stream and runs each configured method.
ReplicationOutcome run_replication(const ScenarioSpec& spec, RngStream& rng, ProbabilityCache* cache = nullptr);
ReplicationOutcome run_methods(const ScenarioSpec& spec, const std::vector<ArmData>& arms,
                               ProbabilityCache* cache = nullptr);

struct MethodOC {
    Method method = Method::Umet;
    std::optional<int> truth;
    std::vector<std::int64_t> counts;  ///< selections per dose
    std::int64_t none = 0;             ///< replications selecting no dose
    std::int64_t replications = 0;

    double fraction(int dose) const;
    double none_fraction() const;
    /// % of replications selecting the truth; 0 when the truth is undefined.
    double pct_correct() const;
    /// Binomial Monte Carlo standard error of pct_correct, in points.
    double se_pct_correct() const;
};

struct OCReport {
    std::string scenario_id;
    std::uint64_t seed = 0;
    std::uint64_t scenario_index = 0;
    int replications = 0;
    int doses = 0;
    std::vector<MethodOC> methods;

    const MethodOC& method(Method m) const;
};

/// Serial reference implementation.
OCReport simulate_serial(const ScenarioSpec& spec, std::uint64_t seed, std::uint64_t scenario_index = 0);

/// OpenMP implementation; identical output to simulate_serial for any
/// worker count, since replication r always uses stream (seed, index, r).
OCReport simulate_parallel(const ScenarioSpec& spec, std::uint64_t seed, std::uint64_t scenario_index,
                           int workers);

/// Dispatches to the serial path for workers <= 1.
OCReport operating_characteristics(const ScenarioSpec& spec, std::uint64_t seed, std::uint64_t scenario_index = 0,
                                   int workers = 1);

}  // namespace doseopt
