#include "landscape/sim.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "landscape/kernels.hpp"
#include "landscape/parallel.hpp"
#include "landscape/rng.hpp"

namespace landscape::sim {

namespace {

// Inverse-CDF sampler over a cost range. Values are exact partial sums of
// the input probabilities, so draws are reproducible bit for bit.
class CostSampler {
  public:
    CostSampler(std::span<const double> p, int k_opt) : k_opt_(k_opt) {
        cdf_.resize(p.size());
        double acc = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            acc += p[i];
            cdf_[i] = acc;
        }
        if (!cdf_.empty()) cdf_.back() = std::max(cdf_.back(), 1.0);
    }

    int draw(SplitMix64& rng) const {
        const double u = rng.next_unit();
        const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        return k_opt_ + static_cast<int>(it - cdf_.begin());
    }

  private:
    int k_opt_;
    std::vector<double> cdf_;
};

struct Accumulator {
    std::uint64_t runs = 0;
    std::uint64_t capped = 0;
    std::uint64_t sum = 0;
    unsigned __int128 sumsq = 0;

    void add(std::uint64_t steps, bool was_capped) {
        ++runs;
        if (was_capped) {
            ++capped;
            return;
        }
        sum += steps;
        sumsq += static_cast<unsigned __int128>(steps) * steps;
    }

    void merge(const Accumulator& o) {
        runs += o.runs;
        capped += o.capped;
        sum += o.sum;
        sumsq += o.sumsq;
    }
};

SimResult finish(const Accumulator& acc) {
    SimResult r;
    r.runs = acc.runs;
    r.capped_runs = acc.capped;
    const std::uint64_t ok = acc.runs - acc.capped;
    r.empirical_success_rate = acc.runs ? static_cast<double>(ok) / acc.runs : 0.0;
    if (ok == 0) return r;
    const double n = static_cast<double>(ok);
    const double mean = static_cast<double>(acc.sum) / n;
    r.mean_steps = mean;
    if (ok > 1) {
        const double sq = static_cast<double>(acc.sumsq);
        const double var = std::max(0.0, (sq - n * mean * mean) / (n - 1.0));
        r.std_error = std::sqrt(var / n);
    }
    return r;
}

template <typename RunFn>
SimResult run_parallel(const SimConfig& cfg, unsigned threads, RunFn run_one) {
    cfg.validate();
    constexpr std::size_t kChunks = 64;
    std::vector<Accumulator> partial(kChunks);
    parallel_chunks(
        cfg.runs, threads,
        [&](std::size_t chunk, std::uint64_t b, std::uint64_t e) {
            Accumulator& acc = partial[chunk];
            for (std::uint64_t i = b; i < e; ++i) {
                SplitMix64 rng = substream(cfg.seed, i);
                const auto [steps, capped] = run_one(rng);
                acc.add(steps, capped);
            }
        },
        kChunks);
    Accumulator total;
    for (const auto& p : partial) total.merge(p);
    return finish(total);
}

}  // namespace

SimResult simulate_blind(const CostDistribution& dist, int t, const SimConfig& cfg,
                         unsigned threads) {
    if (p_less(dist, t + 1) <= 0.0)
        raise(errc::unreachable_target, "blind search cannot reach cost " + std::to_string(t));
    const CostSampler sampler(dist.values(), dist.range().k_opt);
    return run_parallel(cfg, threads, [&](SplitMix64& rng) -> std::pair<std::uint64_t, bool> {
        std::uint64_t steps = 0;
        while (steps < cfg.step_cap) {
            ++steps;
            if (sampler.draw(rng) <= t) return {steps, false};
        }
        return {steps, true};
    });
}

SimResult simulate_lbd(const CostDistribution& dist, const NeighbourKernel& kernel,
                       const SimConfig& cfg, unsigned threads) {
    const CostRange& range = dist.range();
    const int k = cfg.spec.k;
    const int t = cfg.spec.t;
    if (t > k || t < range.k_opt || k > range.k_max)
        raise(errc::bad_target, "descent needs k_opt <= t <= k <= k_max");
    if (p_less(dist, t + 1) <= 0.0)
        raise(errc::unreachable_target, "no mass at or below the target");
    if (cfg.spec.n.is_infinite)
        raise(errc::invalid_argument, "simulation needs a finite neighbourhood size");
    const std::uint64_t n = cfg.spec.n.count;

    const CostSampler blind_sampler(dist.values(), range.k_opt);
    std::vector<std::optional<CostSampler>> rows(static_cast<std::size_t>(range.size()));
    for (int j = range.k_opt; j <= range.k_max; ++j)
        if (kernel.row_present(j))
            rows[static_cast<std::size_t>(range.index(j))].emplace(kernel.row(j), range.k_opt);

    return run_parallel(cfg, threads, [&](SplitMix64& rng) -> std::pair<std::uint64_t, bool> {
        std::uint64_t steps = 0;
        for (;;) {
            // Blind phase: find a start of cost <= k.
            int cost;
            do {
                if (steps >= cfg.step_cap) return {steps, true};
                ++steps;
                cost = blind_sampler.draw(rng);
            } while (cost > k);
            // Descent phase.
            while (cost > t) {
                const auto& row = rows[static_cast<std::size_t>(range.index(cost))];
                if (!row) {
                    // Level without a kernel row (possible in sampled
                    // landscapes): nothing to probe, a full batch fails.
                    if (steps + n >= cfg.step_cap) return {cfg.step_cap, true};
                    steps += n;
                    break;
                }
                std::uint64_t probe = 0;
                bool improved = false;
                while (probe < n) {
                    if (steps >= cfg.step_cap) return {steps, true};
                    ++probe;
                    ++steps;
                    const int c2 = row->draw(rng);
                    if (c2 < cost) {
                        cost = c2;
                        improved = true;
                        break;
                    }
                }
                if (!improved) break;  // n failures: back to blind search
            }
            if (cost <= t) return {steps, false};
        }
    });
}

SimResult simulate_tsp_descent(const models::TspInstance& instance, const SimConfig& cfg,
                               bool without_replacement, unsigned threads) {
    const int n_cities = instance.num_cities;
    const kernels::MoveTable moves = kernels::two_opt_moves(n_cities);
    const std::uint64_t m = moves.size();
    const int k = cfg.spec.k;
    const int t = cfg.spec.t;
    if (t > k) raise(errc::bad_target, "target above starting cost");
    if (cfg.spec.n.is_infinite)
        raise(errc::invalid_argument, "simulation needs a finite neighbourhood size");
    const std::uint64_t n = std::min<std::uint64_t>(cfg.spec.n.count, m);

    return run_parallel(cfg, threads, [&](SplitMix64& rng) -> std::pair<std::uint64_t, bool> {
        std::vector<std::int32_t> tour(static_cast<std::size_t>(n_cities));
        std::vector<std::uint32_t> order(moves.size());
        std::uint64_t steps = 0;
        for (;;) {
            // Blind phase: uniform random tours until cost <= k.
            std::int64_t cost;
            do {
                if (steps >= cfg.step_cap) return {steps, true};
                ++steps;
                std::iota(tour.begin(), tour.end(), 0);
                for (int i = n_cities - 1; i > 1; --i) {
                    const auto j =
                        1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i)));
                    std::swap(tour[static_cast<std::size_t>(i)], tour[static_cast<std::size_t>(j)]);
                }
                cost = instance.tour_cost(tour);
            } while (cost > k);
            // Descent phase: probe random 2-opt moves, apply the first
            // improving one.
            while (cost > t) {
                bool improved = false;
                if (without_replacement) {
                    std::iota(order.begin(), order.end(), 0u);
                    for (std::uint64_t probe = 0; probe < n; ++probe) {
                        if (steps >= cfg.step_cap) return {steps, true};
                        const auto pick =
                            probe + rng.next_below(static_cast<std::uint64_t>(m - probe));
                        std::swap(order[probe], order[pick]);
                        ++steps;
                        const auto mi = order[probe];
                        const std::int32_t delta = [&] {
                            const std::int32_t ca = tour[moves.a[mi]];
                            const std::int32_t ca1 = tour[moves.a1[mi]];
                            const std::int32_t cb = tour[moves.b[mi]];
                            const std::int32_t cb1 = tour[moves.b1[mi]];
                            return instance.edge(ca, cb) + instance.edge(ca1, cb1) -
                                   instance.edge(ca, ca1) - instance.edge(cb, cb1);
                        }();
                        if (delta < 0) {
                            std::reverse(tour.begin() + moves.a1[mi], tour.begin() + moves.b[mi] + 1);
                            cost += delta;
                            improved = true;
                            break;
                        }
                    }
                } else {
                    for (std::uint64_t probe = 0; probe < n; ++probe) {
                        if (steps >= cfg.step_cap) return {steps, true};
                        ++steps;
                        const auto mi = rng.next_below(m);
                        const std::int32_t ca = tour[moves.a[mi]];
                        const std::int32_t ca1 = tour[moves.a1[mi]];
                        const std::int32_t cb = tour[moves.b[mi]];
                        const std::int32_t cb1 = tour[moves.b1[mi]];
                        const std::int32_t delta = instance.edge(ca, cb) + instance.edge(ca1, cb1) -
                                                   instance.edge(ca, ca1) - instance.edge(cb, cb1);
                        if (delta < 0) {
                            std::reverse(tour.begin() + moves.a1[mi], tour.begin() + moves.b[mi] + 1);
                            cost += delta;
                            improved = true;
                            break;
                        }
                    }
                }
                if (!improved) break;
            }
            if (cost <= t) return {steps, false};
        }
    });
}

void trace_lbd(const CostDistribution& dist, const NeighbourKernel& kernel, const SimConfig& cfg,
               std::uint64_t max_runs, const std::string& csv_path) {
    const CostRange& range = dist.range();
    std::ofstream out(csv_path);
    if (!out) raise(errc::io_failure, "cannot write " + csv_path);
    out << "run,phase,step,cost\n";

    const CostSampler blind_sampler(dist.values(), range.k_opt);
    std::vector<std::optional<CostSampler>> rows(static_cast<std::size_t>(range.size()));
    for (int j = range.k_opt; j <= range.k_max; ++j)
        if (kernel.row_present(j))
            rows[static_cast<std::size_t>(range.index(j))].emplace(kernel.row(j), range.k_opt);

    const std::uint64_t n = cfg.spec.n.count;
    for (std::uint64_t run = 0; run < std::min(cfg.runs, max_runs); ++run) {
        SplitMix64 rng = substream(cfg.seed, run);
        std::uint64_t steps = 0;
        bool done = false;
        while (!done && steps < cfg.step_cap) {
            int cost;
            do {
                ++steps;
                cost = blind_sampler.draw(rng);
                out << run << ",blind," << steps << "," << cost << "\n";
            } while (cost > cfg.spec.k && steps < cfg.step_cap);
            while (cost > cfg.spec.t && steps < cfg.step_cap) {
                const auto& row = rows[static_cast<std::size_t>(range.index(cost))];
                if (!row) {
                    steps += n;
                    break;
                }
                std::uint64_t probe = 0;
                bool improved = false;
                while (probe < n && steps < cfg.step_cap) {
                    ++probe;
                    ++steps;
                    const int c2 = row->draw(rng);
                    out << run << ",descent," << steps << "," << c2 << "\n";
                    if (c2 < cost) {
                        cost = c2;
                        improved = true;
                        break;
                    }
                }
                if (!improved) break;
            }
            done = cost <= cfg.spec.t;
        }
    }
}

}  // namespace landscape::sim
