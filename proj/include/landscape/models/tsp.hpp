#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "landscape/prob.hpp"

namespace landscape::models {

// Symmetric TSP instance with integer edge lengths in 1..25.
struct TspInstance {
    int num_cities = 0;
    std::uint64_t seed = 0;
    std::vector<std::int32_t> dist;  // flattened num_cities x num_cities, zero diagonal

    std::int32_t edge(int a, int b) const {
        return dist[static_cast<std::size_t>(a) * num_cities + b];
    }
    std::int64_t tour_cost(std::span<const std::int32_t> tour) const;
};

// Deterministic instance from a splitmix64 stream: edge (a,b), a < b in row
// order, gets length 1 + next() % 25.
TspInstance tsp_generate(int num_cities, std::uint64_t seed);

// Landscape of an instance under the 2-opt neighbourhood: cost probabilities
// from all tours (or a sample of tours) and the per-level neighbour kernel
// over all n(n-3)/2 moves of each tour.
struct TspLandscape {
    CostDistribution dist;
    NeighbourKernel kernel;
    int k_opt = 0;
    int k_mod = 0;
    int k_ge = 0;
    std::uint64_t tours = 0;  // tours evaluated (distinct for enumerate, draws for sample)
};

// Exhaustive enumeration of all (n-1)!/2 undirected tours. Throws too_large
// above 12 cities.
TspLandscape tsp_enumerate(const TspInstance& instance, unsigned threads = 0);

// Uniform tour sampling (with replacement); kernel rows exist only for
// sampled cost levels.
TspLandscape tsp_sample(const TspInstance& instance, std::uint64_t num_samples,
                        std::uint64_t seed, unsigned threads = 0);

// Instance file: line 1 "tsp <num_cities> <seed>", then the strict lower
// triangle of the distance matrix row by row.
void write_instance(const TspInstance& instance, const std::string& path);
TspInstance read_instance(const std::string& path);

// Per-instance verdicts of the beneficial-search conditions over
// k_opt+1..k_ge: at each level either r(k, k-k_opt) >= 1 or both
// rbar(k) >= 1 and pn^<(k) >= rbar(k) * p^<(k). The bound k_ge here comes
// from the monotone-run modal cost of the histogram (not the mode), and
// levels whose tours have no improving neighbours at all are counted as
// degenerate rather than judged; no condition on improvement probability can
// hold where pn^<(k) = 0.
struct TspStudyRow {
    std::uint64_t seed = 0;
    int k_opt = 0;
    int k_mod = 0;  // mode of the histogram
    int k_ge = 0;   // condition range bound, from the monotone-run modal cost
    bool conditions_hold = false;
    int degenerate_levels = 0;
    // Lowest cost with improving neighbours where one-step blind improvement
    // beats the neighbourhood's; INT_MAX when it never does.
    int crossover_k = 0;
};

TspStudyRow tsp_study_instance(const TspInstance& instance, unsigned threads = 0);
std::vector<TspStudyRow> tsp_study(int num_cities, std::uint64_t base_seed, int instances,
                                   unsigned threads = 0);

}  // namespace landscape::models
