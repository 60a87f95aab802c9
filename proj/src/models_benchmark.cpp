#include "landscape/models/benchmark.hpp"

#include "landscape/kernels.hpp"

namespace landscape::models {

std::vector<double> benchmark_counts(const BenchmarkClassSpec& spec) {
    spec.validate();
    const int n = spec.terms;
    // C(n,k) fits a double exactly for n <= 50 (max ~1.26e14 < 2^53).
    std::vector<double> choose(static_cast<std::size_t>(n) + 1);
    choose[0] = 1.0;
    for (int k = 0; k < n; ++k)
        choose[static_cast<std::size_t>(k) + 1] =
            choose[static_cast<std::size_t>(k)] * (n - k) / (k + 1);

    std::vector<double> ct(static_cast<std::size_t>(4 * n) + 1);
    for (int k = 0; k < n; ++k) {
        const double lo = choose[static_cast<std::size_t>(k)];
        const double hi = spec.interpolation == BenchmarkClassSpec::Interpolation::successive
                              ? choose[static_cast<std::size_t>(k) + 1]
                              : lo + 1.0;
        for (int i = 0; i < 4; ++i)
            ct[static_cast<std::size_t>(4 * k + i)] = lo + i * (hi - lo) / 4.0;
    }
    ct[static_cast<std::size_t>(4 * n)] = choose[static_cast<std::size_t>(n)];
    return ct;
}

CostDistribution benchmark_distribution(const BenchmarkClassSpec& spec) {
    std::vector<double> ct = benchmark_counts(spec);
    const double total = kernels::sum(ct);
    for (double& v : ct) v /= total;
    const CostRange range(0, static_cast<int>(ct.size()) - 1);
    return CostDistribution(range, std::move(ct));
}

}  // namespace landscape::models
