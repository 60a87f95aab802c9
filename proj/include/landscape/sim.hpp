#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "landscape/descent.hpp"
#include "landscape/models/tsp.hpp"
#include "landscape/prob.hpp"

namespace landscape::sim {

struct SimConfig {
    std::uint64_t runs = 100000;
    std::uint64_t seed = 1;
    descent::DescentSpec spec;
    std::uint64_t step_cap = 10000000;  // abort bound per run

    void validate() const {
        if (runs < 1) raise(errc::invalid_argument, "need at least one run");
        if (step_cap < 1) raise(errc::invalid_argument, "step cap must be positive");
    }
};

struct SimResult {
    double mean_steps = 0.0;  // over uncapped runs
    double std_error = 0.0;   // sample std dev / sqrt(uncapped runs)
    std::uint64_t runs = 0;
    std::uint64_t capped_runs = 0;
    double empirical_success_rate = 0.0;

    bool agrees_with(double analytic, double sigmas = 3.0) const {
        return std::abs(mean_steps - analytic) <= sigmas * std_error;
    }
};

// Independent draws from p until a cost <= t appears; every evaluation is
// one step.
SimResult simulate_blind(const CostDistribution& dist, int t, const SimConfig& cfg,
                         unsigned threads = 0);

// Full local blind descent: blind to <= spec.k, then per level up to n
// independent neighbour draws from the kernel row; a failed batch charges n
// steps and restarts the blind phase.
SimResult simulate_lbd(const CostDistribution& dist, const NeighbourKernel& kernel,
                       const SimConfig& cfg, unsigned threads = 0);

// First-improvement 2-opt descent on concrete tours of an instance,
// replaying the same process against real neighbourhoods instead of the
// aggregated kernel. Probing is with replacement unless `without_replacement`
// is set.
SimResult simulate_tsp_descent(const models::TspInstance& instance, const SimConfig& cfg,
                               bool without_replacement = false, unsigned threads = 0);

// Optional per-run trace of the first `max_runs` runs, written as CSV rows
// run,phase,step,cost. Tracing runs single-threaded.
void trace_lbd(const CostDistribution& dist, const NeighbourKernel& kernel, const SimConfig& cfg,
               std::uint64_t max_runs, const std::string& csv_path);

}  // namespace landscape::sim
