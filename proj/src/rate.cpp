#include "landscape/rate.hpp"

#include "landscape/kernels.hpp"

namespace landscape::rate {

namespace {

// sum of a[i] * (k - cost_i) over the slice of costs k_opt..hi-1.
double weighted_drop(std::span<const double> a, int k_opt, int k) {
    if (a.empty()) return 0.0;
    const double below = kernels::sum(a);
    return static_cast<double>(k - k_opt) * below - kernels::index_weighted_sum(a, 0.0);
}

}  // namespace

ImprovementReport expected_improvement(const CostDistribution& dist,
                                       const NeighbourKernel& kernel, int k) {
    return expected_improvement_to_target(dist, kernel, k, k);
}

ImprovementReport expected_improvement_to_target(const CostDistribution& dist,
                                                 const NeighbourKernel& kernel, int k, int t) {
    if (t > k) raise(errc::bad_target, "target cost above current cost");
    const CostRange& range = dist.range();
    auto row = kernel.row(k);  // raises missing_row when p(k) = 0

    ImprovementReport rep;
    rep.k = k;
    rep.t = t;
    rep.e_imp = weighted_drop(dist.below(t), range.k_opt, t);
    const std::size_t below_t =
        t <= range.k_opt ? 0 : static_cast<std::size_t>(std::min(t, range.k_max + 1) - range.k_opt);
    rep.en_imp = weighted_drop(row.first(below_t), range.k_opt, t);
    return rep;
}

std::vector<RatePoint> rate_curve(const CostDistribution& dist, const NeighbourKernel& kernel) {
    std::vector<RatePoint> curve;
    for (int k = dist.range().k_opt; k <= dist.range().k_max; ++k) {
        if (!kernel.row_present(k)) continue;
        const auto rep = expected_improvement(dist, kernel, k);
        curve.push_back({k, rep.e_imp, rep.en_imp});
    }
    return curve;
}

}  // namespace landscape::rate
