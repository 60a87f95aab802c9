#pragma once

#include <vector>

#include "landscape/prob.hpp"

namespace landscape {

// NWeights r(k,delta): the lift of neighbour probability at cost distance
// delta over the base probability p(k +- delta),
//   r(k,delta) = (pn(k,k+delta) + pn(k,k-delta)) / (p(k+delta) + p(k-delta)).
// Entries with an empty denominator are undefined and stored as NaN; they
// contribute 0 to the averages, whose divisor stays fixed at k - k_opt
// (respectively k - t).
class NWeightTable {
  public:
    const CostRange& range() const { return range_; }

    bool has_row(int k) const { return range_.contains(k) && !r_[range_.index(k)].empty(); }
    bool has(int k, int delta) const;
    // NaN when undefined.
    double r(int k, int delta) const;
    int max_delta(int k) const;

    // Average NWeight over delta = 1..k-k_opt; NaN at k = k_opt.
    double rbar(int k) const;
    // Average down to cost t: delta = 1..k-t; NaN when t >= k.
    double rbar_t(int k, int t) const;
    // Same average but divided by the number of defined entries instead of
    // k - k_opt; relevant for sampled landscapes with gaps in the support.
    double rbar_support(int k) const;

  private:
    friend NWeightTable compute_nweights(const CostDistribution&, const NeighbourKernel&);
    CostRange range_;
    std::vector<std::vector<double>> r_;        // [k][delta], NaN = undefined
    std::vector<std::vector<double>> prefix_;   // prefix_[k][d] = sum of r(k,1..d), NaN as 0
};

NWeightTable compute_nweights(const CostDistribution& dist, const NeighbourKernel& kernel);

// NWeighted improving / worsening mass:
//   pbr^<(k) = sum p(k-delta) r(k,delta),  pbr^>(k) = sum p(k+delta) r(k,delta)
// over delta = 1..k-k_opt, undefined entries counting 0.
double pbr_less(const CostDistribution& dist, const NWeightTable& weights, int k);
double pbr_greater(const CostDistribution& dist, const NWeightTable& weights, int k);

struct UnbiasedCheck {
    bool unbiased = false;
    bool positively_biased = false;
    // posr(k,delta) = pn(k,k-delta) - p(k-delta) r(k,delta), for the defined
    // deltas in 1..k-k_opt.
    std::vector<std::pair<int, double>> posr;
};

UnbiasedCheck check_unbiased(const CostDistribution& dist, const NeighbourKernel& kernel,
                             const NWeightTable& weights, int k);

// Condition survey for one cost level.
struct LevelConditions {
    int k = 0;
    bool ge = false;               // 2(k - k_opt) <= k_mod - k_opt
    bool nsc = false;              // unbiased and r nonincreasing in delta
    bool unbiased = false;
    bool positively_biased = false;
    bool full_nsc = false;         // nsc at all levels <= k, r nondecreasing as level drops
    bool thm1_holds = false;       // rbar >= 1 and pn^< >= rbar p^<
    bool thm2_holds = false;       // weak condition: pn(k,k) - p(k) <= a^> + a^>>
    double weak_cond_slack = 0.0;  // a(k) - t(k)
    bool improving_direct = false; // pn^<(k) >= p^<(k), checked outright
    bool rkk_shortcut = false;     // r(k, k-k_opt) >= 1
};

struct ConditionReport {
    int k_mod = 0;
    int k_ge = 0;  // max k with k + (k - k_opt) <= k_mod
    std::vector<LevelConditions> levels;  // one entry per cost level with p(k) > 0

    const LevelConditions* at(int k) const;
};

ConditionReport check_conditions(const CostDistribution& dist, const NeighbourKernel& kernel,
                                 const NWeightTable& weights);

}  // namespace landscape
