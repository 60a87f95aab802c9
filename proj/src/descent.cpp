#include "landscape/descent.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "landscape/kernels.hpp"

namespace landscape::descent {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double blind_steps(const CostDistribution& dist, int t) {
    const double mass = p_less(dist, t + 1);
    if (mass <= 0.0)
        raise(errc::unreachable_target, "no probability mass at or below cost " + std::to_string(t));
    return 1.0 / mass;
}

ImpNop imp_and_nop(const NeighbourKernel& kernel, int k, NeighbourhoodSize n, ImpVariant variant) {
    const double s = pn_less(kernel, k);
    ImpNop out;
    if (n.is_infinite) {
        if (s <= 0.0)
            raise(errc::dead_end, "no improving neighbours at cost " + std::to_string(k));
        out.imp = 1.0 / s;
        out.nop = 0.0;
        return out;
    }
    const double q = 1.0 - s;
    const double nd = static_cast<double>(n.count);
    out.nop = std::pow(q, nd);
    if (s <= 0.0) {
        out.imp = 0.0;
        return out;
    }
    // sum_{j=1..n} j q^(j-1) s = (1 - (n+1) q^n + n q^(n+1)) / s
    const double qn = out.nop;
    out.imp = (1.0 - (nd + 1.0) * qn + nd * qn * q) / s;
    if (variant == ImpVariant::normalized && out.nop < 1.0) out.imp /= (1.0 - out.nop);
    return out;
}

DescentResult lbd_steps(const CostDistribution& dist, const NeighbourKernel& kernel,
                        const DescentSpec& spec, ImpVariant variant) {
    const CostRange& range = dist.range();
    const int k = spec.k;
    const int t = spec.t;
    if (t > k || t < range.k_opt || k > range.k_max)
        raise(errc::bad_target, "descent needs k_opt <= t <= k <= k_max");
    if (dist.range() != kernel.range())
        raise(errc::range_mismatch, "distribution and kernel cost ranges differ");

    const double blind_t = blind_steps(dist, t);
    const double blind_k = blind_steps(dist, k);  // p^<(k+1) >= p^<(t+1) > 0

    // steps(j) = reach[j]? a[j] + (1 - s[j]) * L : undefined, where s[j] is
    // the probability the descent from j reaches <= t before restarting and
    // a[j] the steps spent until that pass ends either way.
    const int width = range.index(k) + 1;
    std::vector<double> a(static_cast<std::size_t>(width), 0.0);
    std::vector<double> s(static_cast<std::size_t>(width), 0.0);
    for (int j = range.k_opt; j <= std::min(t, k); ++j) s[static_cast<std::size_t>(range.index(j))] = 1.0;

    const double n_steps = spec.n.is_infinite ? 0.0 : static_cast<double>(spec.n.count);
    for (int j = t + 1; j <= k; ++j) {
        const std::size_t idx = static_cast<std::size_t>(range.index(j));
        if (!kernel.row_present(j)) continue;  // blind cannot land here: p(j) = 0
        const double pnl = pn_less(kernel, j);
        if (pnl <= 0.0) {
            if (spec.n.is_infinite)
                raise(errc::dead_end, "no improving neighbours at cost " + std::to_string(j));
            a[idx] = n_steps;
            s[idx] = 0.0;
            continue;
        }
        const ImpNop in = imp_and_nop(kernel, j, spec.n, variant);
        const auto below = kernel.row(j).first(idx);
        const double wa = kernels::dot(below, std::span<const double>(a.data(), idx));
        const double ws = kernels::dot(below, std::span<const double>(s.data(), idx));
        a[idx] = in.nop * n_steps + (1.0 - in.nop) * (in.imp + wa / pnl);
        s[idx] = (1.0 - in.nop) * (ws / pnl);
    }

    // lbd = blind(k) + sum_j q_j steps(j) with q_j = p(j)/p^<(k+1); steps is
    // affine in lbd, so lbd = (blind(k) + sum q_j a_j) / (sum q_j s_j).
    const double landing_mass = p_less(dist, k + 1);
    double qa = 0.0, qs = 0.0;
    for (int j = range.k_opt; j <= k; ++j) {
        const double q = dist.p(j) / landing_mass;
        const std::size_t idx = static_cast<std::size_t>(range.index(j));
        qa += q * a[idx];
        qs += q * s[idx];
    }
    if (qs <= 0.0)
        raise(errc::divergent, "descent from cost " + std::to_string(k) +
                                   " cannot reach the target in expectation");
    const double lbd = (blind_k + qa) / qs;

    DescentResult out;
    out.blind_steps = blind_t;
    out.lbd_steps = lbd;
    out.savings = (blind_t - lbd) / blind_t;
    out.beneficial = lbd <= blind_t;
    out.steps_table.reserve(static_cast<std::size_t>(width));
    for (int j = range.k_opt; j <= k; ++j) {
        const std::size_t idx = static_cast<std::size_t>(range.index(j));
        if (j > t && !kernel.row_present(j)) continue;
        out.steps_table.emplace_back(j, a[idx] + (1.0 - s[idx]) * lbd);
    }
    return out;
}

double steps_infinite(const CostDistribution& dist, const NeighbourKernel& kernel, int k, int t) {
    const CostRange& range = dist.range();
    if (t > k || !range.contains(k) || t < range.k_opt)
        raise(errc::bad_target, "steps needs k_opt <= t <= k <= k_max");
    if (k == t) return 0.0;

    // Levels that the descent from k can actually visit.
    const int width = range.index(k) + 1;
    std::vector<std::uint8_t> reachable(static_cast<std::size_t>(width), 0);
    reachable[static_cast<std::size_t>(range.index(k))] = 1;
    for (int j = k; j > t; --j) {
        if (!reachable[static_cast<std::size_t>(range.index(j))]) continue;
        if (!kernel.row_present(j)) continue;
        const auto row = kernel.row(j);
        for (int i = range.k_opt; i < j; ++i)
            if (row[static_cast<std::size_t>(range.index(i))] > 0.0)
                reachable[static_cast<std::size_t>(range.index(i))] = 1;
    }

    std::vector<double> steps(static_cast<std::size_t>(width), 0.0);
    for (int j = t + 1; j <= k; ++j) {
        const std::size_t idx = static_cast<std::size_t>(range.index(j));
        if (!reachable[idx]) continue;
        if (!kernel.row_present(j))
            raise(errc::dead_end, "no kernel row at reachable cost " + std::to_string(j));
        const double pnl = pn_less(kernel, j);
        if (pnl <= 0.0)
            raise(errc::dead_end, "no improving neighbours at cost " + std::to_string(j));
        const auto below = kernel.row(j).first(idx);
        const double inner = kernels::dot(below, std::span<const double>(steps.data(), idx));
        steps[idx] = (1.0 + inner) / pnl;
    }
    return steps[static_cast<std::size_t>(range.index(k))];
}

namespace {

// p_u(i): base probabilities up to t, flat p(t) above.
inline double p_uniformized(const CostDistribution& dist, int t, int i) {
    return i <= t ? dist.p(i) : dist.p(t);
}

double imp_u_denominator(const CostDistribution& dist, const NWeightTable& weights, int k, int t) {
    // Improving mass under the uniformized unbiased model:
    // sum_{i=k_opt..k-1} r(k, k-i) p_u(i).
    double d = 0.0;
    for (int i = dist.range().k_opt; i < k; ++i) {
        if (!weights.has(k, k - i)) continue;
        d += weights.r(k, k - i) * p_uniformized(dist, t, i);
    }
    return d;
}

}  // namespace

double imp_u(const CostDistribution& dist, const NWeightTable& weights, int k, int t) {
    const double d = imp_u_denominator(dist, weights, k, t);
    if (d <= 0.0) raise(errc::dead_end, "uniformized model has no improving mass at cost " +
                                            std::to_string(k));
    return 1.0 / d;
}

double steps_u(const CostDistribution& dist, const NWeightTable& weights, int k, int t) {
    const CostRange& range = dist.range();
    if (t > k || !range.contains(k) || t < range.k_opt)
        raise(errc::bad_target, "steps needs k_opt <= t <= k <= k_max");
    if (k == t) return 0.0;

    const int width = range.index(k) + 1;
    std::vector<double> steps(static_cast<std::size_t>(width), 0.0);
    for (int j = t + 1; j <= k; ++j) {
        if (!weights.has_row(j)) continue;
        double inner = 0.0;
        for (int i = range.k_opt; i < j; ++i) {
            if (!weights.has(j, j - i)) continue;
            inner += p_uniformized(dist, t, i) * weights.r(j, j - i) *
                     steps[static_cast<std::size_t>(range.index(i))];
        }
        steps[static_cast<std::size_t>(range.index(j))] =
            imp_u(dist, weights, j, t) * (1.0 + inner);
    }
    return steps[static_cast<std::size_t>(range.index(k))];
}

Theorem3Check theorem3_check(const CostDistribution& dist, const NeighbourKernel& kernel,
                             const NWeightTable& weights, const ConditionReport& report, int k,
                             int t) {
    Theorem3Check out;
    out.blind = blind_steps(dist, t);
    if (k == t) {
        out.rbar_hypothesis = true;
        out.below_mod = k <= report.k_mod;
        const auto* lc = report.at(k);
        out.full_nsc = lc && lc->full_nsc;
        out.hypotheses = out.below_mod && out.full_nsc;
        out.conclusion = true;
        return out;
    }
    const double rb = weights.rbar_t(k, t);
    out.rbar_hypothesis = !std::isnan(rb) && dist.p(t) > 0.0 &&
                          rb >= p_less(dist, t + 1) / dist.p(t);
    out.below_mod = k <= report.k_mod;
    const auto* lc = report.at(k);
    out.full_nsc = lc && lc->full_nsc;
    out.hypotheses = out.rbar_hypothesis && out.below_mod && out.full_nsc;
    out.steps = steps_infinite(dist, kernel, k, t);
    out.conclusion = out.steps <= out.blind * (1.0 + 1e-12);
    return out;
}

SavingsScan savings_scan(const CostDistribution& dist, const NeighbourKernel& kernel, int t,
                         NeighbourhoodSize n, ImpVariant variant) {
    const CostRange& range = dist.range();
    if (t < range.k_opt || t > range.k_max)
        raise(errc::bad_target, "target outside cost range");
    const int lo = t + 1;
    const int hi = std::max(std::min(dist.k_mod(), range.k_max), lo);
    if (lo > range.k_max) raise(errc::bad_target, "no starting cost above the target");

    SavingsScan scan;
    scan.best_savings = -kInf;
    scan.best_k = lo;
    for (int k = lo; k <= hi; ++k) {
        double sv = -kInf;
        try {
            sv = lbd_steps(dist, kernel, DescentSpec{k, t, n}, variant).savings;
        } catch (const error& e) {
            if (e.code() != errc::divergent) throw;
        }
        scan.curve.emplace_back(k, sv);
        if (sv > scan.best_savings) {
            scan.best_savings = sv;
            scan.best_k = k;
        }
    }
    return scan;
}

}  // namespace landscape::descent
