#pragma once

#include <vector>

#include "landscape/nweight.hpp"
#include "landscape/prob.hpp"

namespace landscape::descent {

// Local blind descent: blind search down to a starting cost k, then
// first-improvement neighbour probing towards target t with neighbourhood
// size n, restarting the blind phase after n failed probes.
struct DescentSpec {
    int k = 0;
    int t = 0;
    NeighbourhoodSize n;
};

struct DescentResult {
    double blind_steps = 0.0;  // blind(t)
    double lbd_steps = 0.0;    // lbd(k,t,n)
    double savings = 0.0;      // (blind - lbd) / blind
    bool beneficial = false;   // lbd <= blind
    // Expected steps from each cost level j in k_opt..k (0 at or below t).
    std::vector<std::pair<int, double>> steps_table;
};

// Expected blind-search steps to reach cost <= t: 1 / p^<(t+1).
double blind_steps(const CostDistribution& dist, int t);

// imp(k,n): the truncated series sum_{j=1..n} j (1-pn^<)^(j-1) pn^< as
// written; the normalized variant divides by the success probability
// 1 - nop(k,n) and is exposed for sensitivity checks.
enum class ImpVariant { truncated_sum, normalized };

struct ImpNop {
    double imp = 0.0;
    double nop = 0.0;  // probability no probe improves: (1 - pn^<)^n
};

ImpNop imp_and_nop(const NeighbourKernel& kernel, int k, NeighbourhoodSize n,
                   ImpVariant variant = ImpVariant::truncated_sum);

// Solves the steps/lbd mutual recursion by affine elimination: steps(j) is
// affine in lbd, so one ascending pass plus a closed-form solve replaces
// fixed-point iteration.
DescentResult lbd_steps(const CostDistribution& dist, const NeighbourKernel& kernel,
                        const DescentSpec& spec, ImpVariant variant = ImpVariant::truncated_sum);

// Unbounded-neighbourhood expected steps: steps(k,t) with nop = 0, solved by
// ascending recursion. Throws dead_end when a level reachable from k has no
// improving neighbours.
double steps_infinite(const CostDistribution& dist, const NeighbourKernel& kernel, int k, int t);

// Appendix construction: uniform above-target cost probabilities
// p_u(i) = p(i) for i <= t, p(t) otherwise, with the exactly unbiased kernel
// pn(k1,k2) = p_u(k2) r(k1,k1-k2).
double imp_u(const CostDistribution& dist, const NWeightTable& weights, int k, int t);
double steps_u(const CostDistribution& dist, const NWeightTable& weights, int k, int t);

struct Theorem3Check {
    bool rbar_hypothesis = false;   // rbar(k,t) >= p^<(t+1)/p(t)
    bool below_mod = false;         // k <= k_mod
    bool full_nsc = false;
    bool hypotheses = false;
    bool conclusion = false;        // steps_infinite(k,t) <= blind(t)
    double steps = 0.0;
    double blind = 0.0;
};

Theorem3Check theorem3_check(const CostDistribution& dist, const NeighbourKernel& kernel,
                             const NWeightTable& weights, const ConditionReport& report, int k,
                             int t);

struct SavingsScan {
    int best_k = 0;
    double best_savings = 0.0;
    // (k, savings) for k = t+1..k_mod; divergent entries carry -inf.
    std::vector<std::pair<int, double>> curve;
};

SavingsScan savings_scan(const CostDistribution& dist, const NeighbourKernel& kernel, int t,
                         NeighbourhoodSize n, ImpVariant variant = ImpVariant::truncated_sum);

}  // namespace landscape::descent
