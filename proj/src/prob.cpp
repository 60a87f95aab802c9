#include "landscape/prob.hpp"

#include <cmath>
#include <string>

#include "landscape/kernels.hpp"

namespace landscape {

namespace {
constexpr double kMassTol = 1e-12;
}

CostDistribution::CostDistribution(CostRange range, std::vector<double> p)
    : range_(range), p_(std::move(p)) {
    if (static_cast<int>(p_.size()) != range_.size())
        raise(errc::invalid_argument, "distribution length does not match cost range");
    for (double v : p_) {
        if (!(v >= 0.0) || std::isnan(v))
            raise(errc::invalid_argument, "negative probability in distribution");
    }
    const double mass = kernels::sum(p_);
    if (std::abs(mass - 1.0) > kMassTol)
        raise(errc::invalid_argument,
              "distribution mass " + std::to_string(mass) + " is not 1");
    // Largest cost reachable from k_opt through nonincreasing probabilities
    // (towards the optimum); equal neighbours extend the run.
    int m = 0;
    while (m + 1 < range_.size() && p_[m + 1] >= p_[m]) ++m;
    k_mod_ = range_.k_opt + m;
}

std::span<const double> CostDistribution::below(int k) const {
    if (k <= range_.k_opt) return {};
    const int hi = std::min(k, range_.k_max + 1);
    return std::span<const double>(p_.data(), static_cast<std::size_t>(hi - range_.k_opt));
}

NeighbourKernel::NeighbourKernel(CostRange range, NeighbourhoodSize n, std::vector<double> pn,
                                 std::vector<std::uint8_t> row_present)
    : range_(range), n_(n), pn_(std::move(pn)), present_(std::move(row_present)) {
    const std::size_t k = static_cast<std::size_t>(range_.size());
    if (pn_.size() != k * k || present_.size() != k)
        raise(errc::invalid_argument, "kernel dimensions do not match cost range");
    for (std::size_t r = 0; r < k; ++r) {
        std::span<const double> row(pn_.data() + r * k, k);
        if (!present_[r]) continue;
        double mass = kernels::sum(row);
        if (std::abs(mass - 1.0) > kMassTol)
            raise(errc::invalid_argument, "kernel row " + std::to_string(range_.k_opt + (int)r) +
                                              " mass " + std::to_string(mass) + " is not 1");
        for (double v : row)
            if (!(v >= 0.0) || std::isnan(v))
                raise(errc::invalid_argument, "negative probability in kernel row");
    }
}

std::span<const double> NeighbourKernel::row(int k1) const {
    if (!row_present(k1))
        raise(errc::missing_row, "no kernel row at cost " + std::to_string(k1));
    const std::size_t k = static_cast<std::size_t>(range_.size());
    return std::span<const double>(pn_.data() + static_cast<std::size_t>(range_.index(k1)) * k, k);
}

double p_less(const CostDistribution& dist, int k) { return kernels::sum(dist.below(k)); }

double p_greater(const CostDistribution& dist, int k) {
    const CostRange& r = dist.range();
    if (k < r.k_opt || k > r.k_max) return 0.0;
    const int lo = k + 1;
    const int hi = std::min(r.k_max, 2 * k - r.k_opt);  // delta <= k - k_opt
    if (lo > hi) return 0.0;
    return kernels::sum(dist.values().subspan(r.index(lo), hi - lo + 1));
}

double p_much_greater(const CostDistribution& dist, int k) {
    const CostRange& r = dist.range();
    if (k < r.k_opt || k > r.k_max) return 0.0;
    const int lo = 2 * k - r.k_opt + 1;  // delta > k - k_opt
    if (lo > r.k_max) return 0.0;
    return kernels::sum(dist.values().subspan(r.index(lo), r.k_max - lo + 1));
}

double pn_less(const NeighbourKernel& kernel, int k) {
    auto row = kernel.row(k);
    return kernels::sum(row.first(static_cast<std::size_t>(kernel.range().index(k))));
}

double pn_greater(const NeighbourKernel& kernel, int k) {
    auto row = kernel.row(k);
    const CostRange& r = kernel.range();
    const int lo = k + 1;
    const int hi = std::min(r.k_max, 2 * k - r.k_opt);
    if (lo > hi) return 0.0;
    return kernels::sum(row.subspan(r.index(lo), hi - lo + 1));
}

double pn_much_greater(const NeighbourKernel& kernel, int k) {
    auto row = kernel.row(k);
    const CostRange& r = kernel.range();
    const int lo = 2 * k - r.k_opt + 1;
    if (lo > r.k_max) return 0.0;
    return kernels::sum(row.subspan(r.index(lo), r.k_max - lo + 1));
}

}  // namespace landscape
