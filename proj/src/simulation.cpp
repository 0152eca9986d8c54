#include "doseopt/simulation.hpp"

#include <bit>
#include <cmath>
#include <exception>
#include <stdexcept>

#include <omp.h>

#include "doseopt/truth.hpp"

namespace doseopt {

double ProbabilityCache::operator()(const PosteriorPair& pair, double delta) {
    const Key key{{std::bit_cast<std::uint64_t>(pair.high.a), std::bit_cast<std::uint64_t>(pair.high.b),
                   std::bit_cast<std::uint64_t>(pair.low.a), std::bit_cast<std::uint64_t>(pair.low.b),
                   std::bit_cast<std::uint64_t>(delta)}};
    if (const auto it = memo_.find(key); it != memo_.end()) {
        ++hits_;
        return it->second;
    }
    const double p = prob_diff_greater(pair, delta);
    memo_.emplace(key, p);
    return p;
}

std::size_t ProbabilityCache::KeyHash::operator()(const Key& k) const {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (std::uint64_t b : k.bits) {
        h ^= b + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        h *= 0xBF58476D1CE4E5B9ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
}

ScenarioSampler::ScenarioSampler(const ScenarioSpec& spec) : spec_(&spec) {
    arms_.reserve(spec.doses.size());
    for (const auto& r : spec.doses) arms_.emplace_back(r, spec.correlations);
}

std::vector<ArmData> ScenarioSampler::sample(RngStream& rng) const {
    std::vector<ArmData> out;
    out.reserve(arms_.size());
    for (std::size_t d = 0; d < arms_.size(); ++d)
        out.push_back(arms_[d].sample(spec_->n, rng, "dose " + std::to_string(d + 1)));
    return out;
}

ReplicationOutcome run_methods(const ScenarioSpec& spec, const std::vector<ArmData>& arms, ProbabilityCache* cache) {
    ReplicationOutcome out;
    ProbabilityFn prob;
    if (cache) prob = [cache](const PosteriorPair& p, double delta) { return (*cache)(p, delta); };
    for (Method m : spec.methods()) {
        std::optional<int> sel;
        if (m == Method::Empirical) {
            sel = empirical_sequential(arms, spec.empirical, spec.admissibility).selected;
        } else if (spec.decision.strategy == Strategy::Sequential) {
            sel = sequential_select(arms, spec.model(m), spec.decision, spec.admissibility, prob).selected;
        } else {
            sel = pairwise_matrix(arms, spec.model(m), spec.decision, spec.admissibility, prob).recommended;
        }
        out.selected[static_cast<int>(m)] = sel ? *sel : kNoDose;
    }
    return out;
}

ReplicationOutcome run_replication(const ScenarioSpec& spec, RngStream& rng, ProbabilityCache* cache) {
    return run_methods(spec, ScenarioSampler(spec).sample(rng), cache);
}

double MethodOC::fraction(int dose) const {
    return replications ? static_cast<double>(counts.at(dose)) / replications : 0.0;
}

double MethodOC::none_fraction() const { return replications ? static_cast<double>(none) / replications : 0.0; }

double MethodOC::pct_correct() const { return truth ? 100.0 * fraction(*truth) : 0.0; }

double MethodOC::se_pct_correct() const {
    if (!truth || replications == 0) return 0.0;
    const double p = fraction(*truth);
    return 100.0 * std::sqrt(p * (1.0 - p) / replications);
}

const MethodOC& OCReport::method(Method m) const {
    for (const auto& oc : methods)
        if (oc.method == m) return oc;
    throw std::out_of_range(std::string("method not simulated: ") + to_string(m));
}

namespace {

// Per-method selection tallies, indexed [method][dose], last slot = none.
using Tally = std::array<std::vector<std::int64_t>, 3>;

Tally empty_tally(const ScenarioSpec& spec) {
    Tally t;
    for (auto& v : t) v.assign(spec.doses.size() + 1, 0);
    return t;
}

void record(Tally& t, const ReplicationOutcome& o, std::size_t doses) {
    for (int m = 0; m < 3; ++m) {
        const int s = o.selected[m];
        ++t[m][s == kNoDose ? doses : static_cast<std::size_t>(s)];
    }
}

OCReport assemble(const ScenarioSpec& spec, std::uint64_t seed, std::uint64_t index, const Tally& t) {
    OCReport r;
    r.scenario_id = spec.id;
    r.seed = seed;
    r.scenario_index = index;
    r.replications = spec.replications;
    r.doses = static_cast<int>(spec.doses.size());
    for (Method m : spec.methods()) {
        MethodOC oc;
        oc.method = m;
        oc.truth = truth_for(spec, m);
        const auto& row = t[static_cast<int>(m)];
        oc.counts.assign(row.begin(), row.end() - 1);
        oc.none = row.back();
        oc.replications = spec.replications;
        r.methods.push_back(std::move(oc));
    }
    return r;
}

}  // namespace

OCReport simulate_serial(const ScenarioSpec& spec, std::uint64_t seed, std::uint64_t scenario_index) {
    spec.validate();
    const ScenarioSampler sampler(spec);
    ProbabilityCache cache;
    Tally tally = empty_tally(spec);
    for (int rep = 0; rep < spec.replications; ++rep) {
        RngStream rng(stream_seed(seed, scenario_index, static_cast<std::uint64_t>(rep)));
        record(tally, run_methods(spec, sampler.sample(rng), &cache), spec.doses.size());
    }
    return assemble(spec, seed, scenario_index, tally);
}

OCReport simulate_parallel(const ScenarioSpec& spec, std::uint64_t seed, std::uint64_t scenario_index, int workers) {
    spec.validate();
    if (workers < 1) workers = omp_get_max_threads();
    const ScenarioSampler sampler(spec);
    Tally tally = empty_tally(spec);
    std::exception_ptr failure;
#pragma omp parallel num_threads(workers)
    {
        ProbabilityCache cache;
        Tally local = empty_tally(spec);
#pragma omp for schedule(dynamic, 8)
        for (int rep = 0; rep < spec.replications; ++rep) {
            try {
                RngStream rng(stream_seed(seed, scenario_index, static_cast<std::uint64_t>(rep)));
                record(local, run_methods(spec, sampler.sample(rng), &cache), spec.doses.size());
            } catch (...) {
#pragma omp critical(doseopt_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        // Integer counts: the merge order cannot change the totals.
#pragma omp critical(doseopt_merge)
        for (int m = 0; m < 3; ++m)
            for (std::size_t d = 0; d < local[m].size(); ++d) tally[m][d] += local[m][d];
    }
    if (failure) std::rethrow_exception(failure);
    return assemble(spec, seed, scenario_index, tally);
}

OCReport operating_characteristics(const ScenarioSpec& spec, std::uint64_t seed, std::uint64_t scenario_index,
                                   int workers) {
    if (workers <= 1) return simulate_serial(spec, seed, scenario_index);
    return simulate_parallel(spec, seed, scenario_index, workers);
}

}  // namespace doseopt
