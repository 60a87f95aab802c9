#include "landscape/nweight.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace landscape {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kUnbiasedTol = 1e-12;
constexpr double kConditionTol = 1e-10;
}  // namespace

bool NWeightTable::has(int k, int delta) const {
    if (!has_row(k) || delta < 0) return false;
    const auto& row = r_[range_.index(k)];
    return delta < static_cast<int>(row.size()) && !std::isnan(row[delta]);
}

double NWeightTable::r(int k, int delta) const {
    if (!has_row(k) || delta < 0) return kNaN;
    const auto& row = r_[range_.index(k)];
    if (delta >= static_cast<int>(row.size())) return kNaN;
    return row[delta];
}

int NWeightTable::max_delta(int k) const {
    if (!has_row(k)) return -1;
    return static_cast<int>(r_[range_.index(k)].size()) - 1;
}

double NWeightTable::rbar(int k) const { return rbar_t(k, range_.k_opt); }

double NWeightTable::rbar_support(int k) const {
    if (!has_row(k) || k <= range_.k_opt) return kNaN;
    const auto& row = r_[range_.index(k)];
    double sum = 0.0;
    int defined = 0;
    for (int d = 1; d <= std::min<int>(k - range_.k_opt, static_cast<int>(row.size()) - 1); ++d) {
        if (std::isnan(row[static_cast<std::size_t>(d)])) continue;
        sum += row[static_cast<std::size_t>(d)];
        ++defined;
    }
    return defined ? sum / defined : kNaN;
}

double NWeightTable::rbar_t(int k, int t) const {
    if (!has_row(k) || t >= k) return kNaN;
    const auto& pre = prefix_[range_.index(k)];
    const int d = std::min<int>(k - t, static_cast<int>(pre.size()) - 1);
    return pre[d] / static_cast<double>(k - t);
}

NWeightTable compute_nweights(const CostDistribution& dist, const NeighbourKernel& kernel) {
    if (dist.range() != kernel.range())
        raise(errc::range_mismatch, "distribution and kernel cost ranges differ");
    const CostRange& range = dist.range();

    NWeightTable table;
    table.range_ = range;
    table.r_.resize(range.size());
    table.prefix_.resize(range.size());

    for (int k = range.k_opt; k <= range.k_max; ++k) {
        if (!kernel.row_present(k)) continue;
        const int dmax = std::max(k - range.k_opt, range.k_max - k);
        auto& row = table.r_[range.index(k)];
        auto& pre = table.prefix_[range.index(k)];
        row.assign(dmax + 1, kNaN);
        pre.assign(dmax + 1, 0.0);
        for (int d = 0; d <= dmax; ++d) {
            const double denom = (d == 0) ? dist.p(k) : dist.p(k + d) + dist.p(k - d);
            if (denom > 0.0) {
                const double num =
                    (d == 0) ? kernel.pn(k, k) : kernel.pn(k, k + d) + kernel.pn(k, k - d);
                row[d] = num / denom;
            }
            if (d > 0) pre[d] = pre[d - 1] + (std::isnan(row[d]) ? 0.0 : row[d]);
        }
    }
    return table;
}

double pbr_less(const CostDistribution& dist, const NWeightTable& weights, int k) {
    double s = 0.0;
    for (int d = 1; d <= k - dist.range().k_opt; ++d)
        if (weights.has(k, d)) s += dist.p(k - d) * weights.r(k, d);
    return s;
}

double pbr_greater(const CostDistribution& dist, const NWeightTable& weights, int k) {
    double s = 0.0;
    for (int d = 1; d <= k - dist.range().k_opt; ++d)
        if (weights.has(k, d)) s += dist.p(k + d) * weights.r(k, d);
    return s;
}

UnbiasedCheck check_unbiased(const CostDistribution& dist, const NeighbourKernel& kernel,
                             const NWeightTable& weights, int k) {
    UnbiasedCheck out;
    out.unbiased = true;
    for (int d = 1; d <= k - dist.range().k_opt; ++d) {
        if (!weights.has(k, d)) continue;
        const double v = kernel.pn(k, k - d) - dist.p(k - d) * weights.r(k, d);
        out.posr.emplace_back(d, v);
        if (v < -kUnbiasedTol) out.unbiased = false;
        if (v > kUnbiasedTol) out.positively_biased = true;
    }
    out.positively_biased = out.positively_biased && out.unbiased;
    return out;
}

namespace {

// NWeights span many orders of magnitude (1/window-mass blows up towards a
// thin optimum), so monotonicity tolerances scale with the values compared.
double mono_tol(double a, double b) {
    return kConditionTol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool nonincreasing_in_delta(const NWeightTable& w, int k) {
    double last = kNaN;
    for (int d = 1; d <= w.max_delta(k); ++d) {
        if (!w.has(k, d)) continue;  // undefined entries are skipped, not violations
        const double v = w.r(k, d);
        if (!std::isnan(last) && v > last + mono_tol(v, last)) return false;
        last = v;
    }
    return true;
}

}  // namespace

const LevelConditions* ConditionReport::at(int k) const {
    for (const auto& lc : levels)
        if (lc.k == k) return &lc;
    return nullptr;
}

ConditionReport check_conditions(const CostDistribution& dist, const NeighbourKernel& kernel,
                                 const NWeightTable& weights) {
    const CostRange& range = dist.range();
    ConditionReport report;
    report.k_mod = dist.k_mod();
    report.k_ge = range.k_opt + (dist.k_mod() - range.k_opt) / 2;

    bool nsc_below = true;
    bool cross_monotone = true;
    // Last defined r per delta at a lower level, for the cross-level
    // monotonicity of Full NSC.
    std::vector<double> below(static_cast<std::size_t>(range.size()) * 2, kNaN);

    for (int k = range.k_opt; k <= range.k_max; ++k) {
        if (!kernel.row_present(k)) continue;
        LevelConditions lc;
        lc.k = k;
        lc.ge = 2 * (k - range.k_opt) <= report.k_mod - range.k_opt;

        const auto ub = check_unbiased(dist, kernel, weights, k);
        lc.unbiased = ub.unbiased;
        lc.positively_biased = ub.positively_biased;
        lc.nsc = ub.unbiased && nonincreasing_in_delta(weights, k);

        for (int d = 1; d <= weights.max_delta(k); ++d) {
            if (!weights.has(k, d)) continue;
            const double v = weights.r(k, d);
            const double prev = below[static_cast<std::size_t>(d)];
            if (!std::isnan(prev) && v > prev + mono_tol(v, prev)) cross_monotone = false;
            below[static_cast<std::size_t>(d)] = v;
        }
        nsc_below = nsc_below && lc.nsc;
        lc.full_nsc = nsc_below && cross_monotone;

        const double pl = p_less(dist, k);
        const double pnl = pn_less(kernel, k);
        const double rb = weights.rbar(k);
        lc.thm1_holds = !std::isnan(rb) && rb >= 1.0 - kConditionTol &&
                        pnl >= rb * pl - kConditionTol;

        const double a_gt = p_greater(dist, k) - pn_greater(kernel, k);
        const double a_ggt = p_much_greater(dist, k) - pn_much_greater(kernel, k);
        const double t_k = kernel.pn(k, k) - dist.p(k);
        lc.weak_cond_slack = (a_gt + a_ggt) - t_k;
        lc.thm2_holds = lc.weak_cond_slack >= -kConditionTol;

        lc.improving_direct = pnl >= pl - kConditionTol;
        lc.rkk_shortcut = weights.has(k, k - range.k_opt) &&
                          weights.r(k, k - range.k_opt) >= 1.0 - kConditionTol;

        report.levels.push_back(lc);
    }
    return report;
}

}  // namespace landscape
