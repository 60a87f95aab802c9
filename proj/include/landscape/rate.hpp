#pragma once

#include <optional>
#include <vector>

#include "landscape/prob.hpp"

namespace landscape::rate {

// One-step expected cost decrease; worsening neighbours contribute no
// negative improvement.
struct ImprovementReport {
    int k = 0;
    int t = 0;  // equals k in the one-parameter setting
    double e_imp = 0.0;   // blind step
    double en_imp = 0.0;  // neighbour step
};

// e_imp(k) = sum p(k') (k - k'), en_imp(k) = sum pn(k,k') (k - k') over k' < k.
ImprovementReport expected_improvement(const CostDistribution& dist,
                                       const NeighbourKernel& kernel, int k);

// Target variant: improvements are measured from t <= k and only costs below
// t count. e_imp uses the base distribution at t; en_imp uses row k.
ImprovementReport expected_improvement_to_target(const CostDistribution& dist,
                                                 const NeighbourKernel& kernel, int k, int t);

// Per-level curve across the whole range; levels without a kernel row are
// omitted rather than reported as zero.
struct RatePoint {
    int k = 0;
    double e_imp = 0.0;
    double en_imp = 0.0;
};
std::vector<RatePoint> rate_curve(const CostDistribution& dist, const NeighbourKernel& kernel);

}  // namespace landscape::rate
