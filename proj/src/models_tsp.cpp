#include "landscape/models/tsp.hpp"

#include <algorithm>
#include <climits>
#include <fstream>
#include <numeric>
#include <sstream>

#include "landscape/kernels.hpp"
#include "landscape/nweight.hpp"
#include "landscape/parallel.hpp"
#include "landscape/rate.hpp"
#include "landscape/rng.hpp"

namespace landscape::models {

namespace {

constexpr int kMinEdge = 1;
constexpr int kMaxEdge = 25;
constexpr int kMaxEnumCities = 12;
// A 2-opt move swaps two edges, so the cost change is bounded by twice the
// edge length spread.
constexpr int kDeltaBand = 2 * (kMaxEdge - kMinEdge);

struct CountGrid {
    int min_cost = 0;
    int levels = 0;
    std::vector<std::int64_t> tours;          // per cost level
    std::vector<std::int64_t> pairs;          // [level][delta + kDeltaBand]

    explicit CountGrid(int min_cost_, int levels_)
        : min_cost(min_cost_),
          levels(levels_),
          tours(static_cast<std::size_t>(levels_), 0),
          pairs(static_cast<std::size_t>(levels_) * (2 * kDeltaBand + 1), 0) {}

    void add_tour(int cost) { ++tours[static_cast<std::size_t>(cost - min_cost)]; }
    void add_pair(int cost, int delta) {
        ++pairs[static_cast<std::size_t>(cost - min_cost) * (2 * kDeltaBand + 1) +
                (delta + kDeltaBand)];
    }
    void merge(const CountGrid& o) {
        for (std::size_t i = 0; i < tours.size(); ++i) tours[i] += o.tours[i];
        for (std::size_t i = 0; i < pairs.size(); ++i) pairs[i] += o.pairs[i];
    }
};

TspLandscape landscape_from_counts(const TspInstance& instance, const CountGrid& grid,
                                   std::uint64_t total_tours) {
    const int m = instance.num_cities * (instance.num_cities - 3) / 2;
    // The range spans every observed cost; under sampling a neighbour can be
    // cheaper or dearer than every sampled tour.
    int lo = -1, hi = -1;
    for (int i = 0; i < grid.levels; ++i) {
        if (grid.tours[static_cast<std::size_t>(i)] == 0) continue;
        for (int d = -kDeltaBand; d <= kDeltaBand; ++d) {
            if (d != 0 &&
                grid.pairs[static_cast<std::size_t>(i) * (2 * kDeltaBand + 1) + (d + kDeltaBand)] ==
                    0)
                continue;
            // A 2-opt neighbour is itself a tour, so its cost stays inside
            // the theoretical grid.
            const int level = std::clamp(i + d, 0, grid.levels - 1);
            if (lo < 0 || level < lo) lo = level;
            if (level > hi) hi = level;
        }
    }
    if (lo < 0) raise(errc::invalid_argument, "no tours recorded");

    const CostRange range(grid.min_cost + lo, grid.min_cost + hi);
    const std::size_t width = static_cast<std::size_t>(range.size());

    std::vector<double> p(width, 0.0);
    for (int i = 0; i < range.size(); ++i)
        p[static_cast<std::size_t>(i)] =
            static_cast<double>(grid.tours[static_cast<std::size_t>(lo + i)]) /
            static_cast<double>(total_tours);
    const double mass = kernels::sum(p);
    for (double& v : p) v /= mass;

    std::vector<double> pn(width * width, 0.0);
    std::vector<std::uint8_t> present(width, 0);
    for (int i = 0; i < range.size(); ++i) {
        const std::int64_t at_level = grid.tours[static_cast<std::size_t>(lo + i)];
        if (at_level == 0) continue;
        present[static_cast<std::size_t>(i)] = 1;
        const double denom = static_cast<double>(at_level) * m;
        const std::int64_t* band =
            grid.pairs.data() + static_cast<std::size_t>(lo + i) * (2 * kDeltaBand + 1);
        for (int d = -kDeltaBand; d <= kDeltaBand; ++d) {
            const std::int64_t c = band[d + kDeltaBand];
            if (c == 0) continue;
            const int k2 = range.k_opt + i + d;
            pn[static_cast<std::size_t>(i) * width + range.index(k2)] =
                static_cast<double>(c) / denom;
        }
    }

    TspLandscape out{CostDistribution(range, std::move(p)),
                     NeighbourKernel(range, NeighbourhoodSize::finite(static_cast<std::uint64_t>(m)),
                                     std::move(pn), std::move(present)),
                     range.k_opt, 0, 0, total_tours};
    // Counted histograms carry sampling dips, under which the monotone-run
    // form of the modal cost collapses to k_opt; report the mode itself
    // (largest maximizer), which is what the per-level conditions key on.
    std::int64_t best = 0;
    for (int i = lo; i <= hi; ++i) {
        if (grid.tours[static_cast<std::size_t>(i)] >= best) {
            best = grid.tours[static_cast<std::size_t>(i)];
            out.k_mod = grid.min_cost + i;
        }
    }
    out.k_ge = out.k_opt + (out.k_mod - out.k_opt) / 2;
    return out;
}

}  // namespace

std::int64_t TspInstance::tour_cost(std::span<const std::int32_t> tour) const {
    std::int64_t c = 0;
    for (std::size_t i = 0; i + 1 < tour.size(); ++i) c += edge(tour[i], tour[i + 1]);
    c += edge(tour[tour.size() - 1], tour[0]);
    return c;
}

TspInstance tsp_generate(int num_cities, std::uint64_t seed) {
    if (num_cities < 4) raise(errc::invalid_argument, "tsp instances need at least 4 cities");
    TspInstance inst;
    inst.num_cities = num_cities;
    inst.seed = seed;
    inst.dist.assign(static_cast<std::size_t>(num_cities) * num_cities, 0);
    SplitMix64 rng(seed);
    for (int a = 0; a < num_cities; ++a) {
        for (int b = a + 1; b < num_cities; ++b) {
            const auto w = static_cast<std::int32_t>(kMinEdge + rng.next_below(kMaxEdge));
            inst.dist[static_cast<std::size_t>(a) * num_cities + b] = w;
            inst.dist[static_cast<std::size_t>(b) * num_cities + a] = w;
        }
    }
    return inst;
}

TspLandscape tsp_enumerate(const TspInstance& instance, unsigned threads) {
    const int n = instance.num_cities;
    if (n > kMaxEnumCities)
        raise(errc::too_large, "enumeration supports at most " +
                                   std::to_string(kMaxEnumCities) + " cities");
    if (n < 4) raise(errc::invalid_argument, "tsp instances need at least 4 cities");

    const kernels::MoveTable moves = kernels::two_opt_moves(n);
    const int min_cost = n * kMinEdge;
    const int levels = n * (kMaxEdge - kMinEdge) + 1;

    // Partition the tour space by the city visited first after city 0; a
    // tour is counted once via the orientation rule tour[1] < tour[n-1].
    std::vector<CountGrid> partial(static_cast<std::size_t>(n - 1), CountGrid(min_cost, levels));
    std::vector<std::uint64_t> kept(static_cast<std::size_t>(n - 1), 0);

    parallel_chunks(
        static_cast<std::uint64_t>(n - 1), threads,
        [&](std::size_t, std::uint64_t b, std::uint64_t e) {
            std::vector<std::int32_t> tour(static_cast<std::size_t>(n));
            std::vector<std::int32_t> others;
            std::vector<std::int32_t> deltas(moves.size());
            for (std::uint64_t c = b; c < e; ++c) {
                CountGrid& grid = partial[static_cast<std::size_t>(c)];
                const int first = static_cast<int>(c) + 1;
                others.clear();
                for (int v = 1; v < n; ++v)
                    if (v != first) others.push_back(v);
                tour[0] = 0;
                tour[1] = first;
                do {
                    if (first > others.back()) continue;  // orientation canon
                    std::copy(others.begin(), others.end(), tour.begin() + 2);
                    const int cost = static_cast<int>(instance.tour_cost(tour));
                    grid.add_tour(cost);
                    kernels::two_opt_deltas(tour, instance.dist, n, moves, deltas);
                    for (const std::int32_t d : deltas) grid.add_pair(cost, d);
                    ++kept[static_cast<std::size_t>(c)];
                } while (std::next_permutation(others.begin(), others.end()));
            }
        },
        static_cast<std::size_t>(n - 1));

    CountGrid grid(min_cost, levels);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < partial.size(); ++i) {
        grid.merge(partial[i]);
        total += kept[i];
    }
    return landscape_from_counts(instance, grid, total);
}

TspLandscape tsp_sample(const TspInstance& instance, std::uint64_t num_samples,
                        std::uint64_t seed, unsigned threads) {
    if (num_samples < 1) raise(errc::invalid_argument, "need at least one sample");
    const int n = instance.num_cities;
    if (n < 4) raise(errc::invalid_argument, "tsp instances need at least 4 cities");

    const kernels::MoveTable moves = kernels::two_opt_moves(n);
    const int min_cost = n * kMinEdge;
    const int levels = n * (kMaxEdge - kMinEdge) + 1;

    constexpr std::size_t kChunks = 16;
    std::vector<CountGrid> partial(kChunks, CountGrid(min_cost, levels));

    parallel_chunks(
        num_samples, threads,
        [&](std::size_t chunk, std::uint64_t b, std::uint64_t e) {
            CountGrid& grid = partial[chunk];
            std::vector<std::int32_t> tour(static_cast<std::size_t>(n));
            std::vector<std::int32_t> deltas(moves.size());
            for (std::uint64_t s = b; s < e; ++s) {
                SplitMix64 rng = substream(seed, s);
                std::iota(tour.begin(), tour.end(), 0);
                for (int i = n - 1; i > 1; --i) {
                    const auto j =
                        1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i)));
                    std::swap(tour[static_cast<std::size_t>(i)], tour[static_cast<std::size_t>(j)]);
                }
                const int cost = static_cast<int>(instance.tour_cost(tour));
                grid.add_tour(cost);
                kernels::two_opt_deltas(tour, instance.dist, n, moves, deltas);
                for (const std::int32_t d : deltas) grid.add_pair(cost, d);
            }
        },
        kChunks);

    CountGrid grid(min_cost, levels);
    for (const auto& p : partial) grid.merge(p);
    return landscape_from_counts(instance, grid, num_samples);
}

void write_instance(const TspInstance& instance, const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(errc::io_failure, "cannot write " + path);
    out << "tsp " << instance.num_cities << " " << instance.seed << "\n";
    for (int a = 1; a < instance.num_cities; ++a) {
        for (int b = 0; b < a; ++b) {
            if (b) out << ' ';
            out << instance.edge(a, b);
        }
        out << "\n";
    }
    if (!out) raise(errc::io_failure, "failed writing " + path);
}

TspInstance read_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::io_failure, "cannot read " + path);
    std::string tag;
    int n = 0;
    std::uint64_t seed = 0;
    in >> tag >> n >> seed;
    if (!in || tag != "tsp" || n < 4) raise(errc::io_failure, "bad instance header in " + path);
    TspInstance inst;
    inst.num_cities = n;
    inst.seed = seed;
    inst.dist.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 1; a < n; ++a) {
        for (int b = 0; b < a; ++b) {
            std::int32_t w = 0;
            in >> w;
            if (!in || w < kMinEdge || w > kMaxEdge)
                raise(errc::io_failure, "bad edge length in " + path);
            inst.dist[static_cast<std::size_t>(a) * n + b] = w;
            inst.dist[static_cast<std::size_t>(b) * n + a] = w;
        }
    }
    return inst;
}

TspStudyRow tsp_study_instance(const TspInstance& instance, unsigned threads) {
    const TspLandscape land = tsp_enumerate(instance, threads);
    const NWeightTable weights = compute_nweights(land.dist, land.kernel);

    TspStudyRow row;
    row.seed = instance.seed;
    row.k_opt = land.k_opt;
    row.k_mod = land.k_mod;
    row.k_ge = land.k_opt + (land.dist.k_mod() - land.k_opt) / 2;
    row.conditions_hold = true;

    constexpr double tol = 1e-12;
    for (int k = land.k_opt + 1; k <= row.k_ge; ++k) {
        if (!land.kernel.row_present(k)) continue;
        if (pn_less(land.kernel, k) <= 0.0) {
            ++row.degenerate_levels;
            continue;
        }
        const bool shortcut =
            weights.has(k, k - land.k_opt) && weights.r(k, k - land.k_opt) >= 1.0 - tol;
        if (shortcut) continue;
        const double rb = weights.rbar(k);
        const bool thm = rb >= 1.0 - tol &&
                         pn_less(land.kernel, k) >= rb * p_less(land.dist, k) - tol;
        if (!thm) {
            row.conditions_hold = false;
            break;
        }
    }

    row.crossover_k = INT_MAX;
    for (int k = land.k_opt + 1; k <= land.dist.range().k_max; ++k) {
        if (!land.kernel.row_present(k)) continue;
        if (pn_less(land.kernel, k) <= 0.0) continue;  // level has no improving neighbours
        const auto rep = rate::expected_improvement(land.dist, land.kernel, k);
        if (rep.e_imp > rep.en_imp) {
            row.crossover_k = k;
            break;
        }
    }
    return row;
}

std::vector<TspStudyRow> tsp_study(int num_cities, std::uint64_t base_seed, int instances,
                                   unsigned threads) {
    std::vector<TspStudyRow> rows(static_cast<std::size_t>(instances));
    parallel_chunks(
        static_cast<std::uint64_t>(instances), threads,
        [&](std::size_t, std::uint64_t b, std::uint64_t e) {
            for (std::uint64_t i = b; i < e; ++i) {
                const TspInstance inst = tsp_generate(num_cities, base_seed + i);
                rows[i] = tsp_study_instance(inst, 1);
            }
        },
        static_cast<std::size_t>(instances));
    return rows;
}

}  // namespace landscape::models
