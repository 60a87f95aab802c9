#include "landscape/models/lipschitz.hpp"

#include <algorithm>

namespace landscape::models {

CostDistribution uniform_distribution(int k_max) {
    if (k_max < 0) raise(errc::invalid_argument, "uniform distribution needs k_max >= 0");
    std::vector<double> p(static_cast<std::size_t>(k_max) + 1,
                          1.0 / (static_cast<double>(k_max) + 1.0));
    return CostDistribution(CostRange(0, k_max), std::move(p));
}

NeighbourKernel lipschitz_kernel(const CostDistribution& base, int bound) {
    if (bound < 1) raise(errc::invalid_argument, "lipschitz bound must be >= 1");
    const CostRange& range = base.range();
    const std::size_t width = static_cast<std::size_t>(range.size());

    std::vector<double> pn(width * width, 0.0);
    std::vector<std::uint8_t> present(width, 0);

    for (int k = range.k_opt; k <= range.k_max; ++k) {
        if (base.p(k) <= 0.0) continue;
        const int lo = std::max(range.k_opt, k - bound);
        const int hi = std::min(range.k_max, k + bound);
        double w = 0.0;
        for (int i = lo; i <= hi; ++i) w += base.p(i);
        if (w <= 0.0) continue;
        present[static_cast<std::size_t>(range.index(k))] = 1;
        double* row = pn.data() + static_cast<std::size_t>(range.index(k)) * width;
        for (int i = lo; i <= hi; ++i) row[range.index(i)] = base.p(i) / w;
        // Fold the per-entry division residue back in; rows must normalize.
        double mass = 0.0;
        for (int i = lo; i <= hi; ++i) mass += row[range.index(i)];
        if (mass > 0.0)
            for (int i = lo; i <= hi; ++i) row[range.index(i)] /= mass;
    }

    return NeighbourKernel(range, NeighbourhoodSize::infinite(), std::move(pn),
                           std::move(present));
}

double lipschitz_en_imp_clamped(const CostDistribution& base, int bound, int k, int t) {
    if (t > k) raise(errc::bad_target, "target above current cost");
    const CostRange& range = base.range();
    double w = 0.0;
    for (int i = k - bound; i <= k + bound; ++i)
        w += base.p(std::clamp(i, range.k_opt, range.k_max));
    if (w <= 0.0) return 0.0;
    double s = 0.0;
    for (int i = std::max(range.k_opt, k - bound); i < t; ++i)
        s += base.p(i) / w * static_cast<double>(t - i);
    return s;
}

}  // namespace landscape::models
