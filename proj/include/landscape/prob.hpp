#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "landscape/errors.hpp"

namespace landscape {

// Integer cost range K = k_opt..k_max. All distributions and kernels index
// over it; probabilities queried outside the range are exactly 0.
struct CostRange {
    int k_opt = 0;
    int k_max = 0;

    CostRange() = default;
    CostRange(int opt, int max) : k_opt(opt), k_max(max) {
        if (opt > max) raise(errc::invalid_argument, "cost range: k_opt > k_max");
    }

    int size() const { return k_max - k_opt + 1; }
    bool contains(int k) const { return k >= k_opt && k <= k_max; }
    int index(int k) const { return k - k_opt; }
    bool operator==(const CostRange&) const = default;
};

// Neighbourhood size: a positive count or unbounded.
struct NeighbourhoodSize {
    static NeighbourhoodSize finite(std::uint64_t count) {
        if (count == 0) raise(errc::invalid_argument, "neighbourhood size must be positive");
        return {count, false};
    }
    static NeighbourhoodSize infinite() { return {0, true}; }

    std::uint64_t count = 0;
    bool is_infinite = false;
};

// Probability that a uniformly random point has cost k, over a cost range.
// k_mod is the highest cost below which p is monotone nonincreasing towards
// the optimum; ties extend it upward.
class CostDistribution {
  public:
    CostDistribution(CostRange range, std::vector<double> p);

    const CostRange& range() const { return range_; }
    int k_mod() const { return k_mod_; }

    double p(int k) const { return range_.contains(k) ? p_[range_.index(k)] : 0.0; }
    std::span<const double> values() const { return p_; }

    // Probability slice for costs k_opt..k-1 (empty when k <= k_opt).
    std::span<const double> below(int k) const;

  private:
    CostRange range_;
    std::vector<double> p_;
    int k_mod_;
};

// Conditional cost probabilities pn(k1,k2) for a neighbour of a point at
// cost level k1, averaged over the level. Rows exist only for levels that
// carry probability mass; present rows are normalized.
class NeighbourKernel {
  public:
    NeighbourKernel(CostRange range, NeighbourhoodSize n, std::vector<double> pn,
                    std::vector<std::uint8_t> row_present);

    const CostRange& range() const { return range_; }
    NeighbourhoodSize n() const { return n_; }

    bool row_present(int k1) const { return range_.contains(k1) && present_[range_.index(k1)]; }
    // Throws missing_row when the level carries no mass.
    std::span<const double> row(int k1) const;
    double pn(int k1, int k2) const {
        if (!range_.contains(k1) || !range_.contains(k2) || !present_[range_.index(k1)]) return 0.0;
        return pn_[static_cast<std::size_t>(range_.index(k1)) * range_.size() + range_.index(k2)];
    }

  private:
    CostRange range_;
    NeighbourhoodSize n_;
    std::vector<double> pn_;
    std::vector<std::uint8_t> present_;
};

// Blind-search probability of picking a cost strictly below k,
// p^<(k) = sum of p(k-delta) for delta = 1..k-k_opt. Accepts k up to
// k_max + 1.
double p_less(const CostDistribution& dist, int k);
// Window above k: p^>(k) sums p(k+delta) for delta = 1..k-k_opt.
double p_greater(const CostDistribution& dist, int k);
// Tail beyond the window: delta > k-k_opt.
double p_much_greater(const CostDistribution& dist, int k);

// Same split for a kernel row; pn^<(k) is the neighbourhood probability of
// improving from cost k. All throw missing_row when p(k) = 0.
double pn_less(const NeighbourKernel& kernel, int k);
double pn_greater(const NeighbourKernel& kernel, int k);
double pn_much_greater(const NeighbourKernel& kernel, int k);

}  // namespace landscape
