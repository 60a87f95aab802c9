#pragma once

#include "landscape/prob.hpp"

namespace landscape::models {

// Synthetic landscape whose neighbours differ in cost by at most b: inside
// the window, pn(k,k') = p(k') / W(k) with W(k) the window mass
// sum of p(i) for i = k-b..k+b (p extended with zeros outside the range).
struct LipschitzSpaceSpec {
    CostDistribution base;
    int bound = 1;

    void validate() const {
        if (bound < 1) raise(errc::invalid_argument, "lipschitz bound must be >= 1");
    }
};

// Uniform base distribution over 0..k_max (the toy space).
CostDistribution uniform_distribution(int k_max);

NeighbourKernel lipschitz_kernel(const CostDistribution& base, int bound);

inline std::pair<CostDistribution, NeighbourKernel> lipschitz_space(const LipschitzSpaceSpec& spec) {
    spec.validate();
    return {spec.base, lipschitz_kernel(spec.base, spec.bound)};
}

// Alternate window normalization: the window mass is taken as if the window
// never truncated, extending p by clamping the index into the cost range.
// The implied rows can sum below 1, so this is a diagnostic quantity, not a
// kernel: it reports the expected one-step improvement towards target t from
// cost k under that normalization.
double lipschitz_en_imp_clamped(const CostDistribution& base, int bound, int k, int t);

}  // namespace landscape::models
