#include "landscape/models/sat2.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace landscape::models {

namespace {

// Minimal exact rational on 64-bit ints; the kernel mixture only ever sees
// denominators up to C(num_clauses,4) * 3^4.
struct Rat {
    long long num = 0;
    long long den = 1;

    static Rat of(long long n, long long d) { return Rat{n, d}.reduced(); }

    Rat reduced() const {
        long long n = num, d = den;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const long long g = std::gcd(n < 0 ? -n : n, d);
        return g ? Rat{n / g, d / g} : Rat{0, 1};
    }

    Rat operator*(const Rat& o) const {
        // Cross-reduce before multiplying to stay far from overflow.
        const Rat a = Rat{num, o.den}.reduced();
        const Rat b = Rat{o.num, den}.reduced();
        return Rat{a.num * b.num, a.den * b.den}.reduced();
    }

    Rat operator+(const Rat& o) const {
        const long long g = std::gcd(den, o.den);
        const long long l = den / g * o.den;
        return Rat{num * (l / den) + o.num * (l / o.den), l}.reduced();
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

long long binom_small(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

CostDistribution sat2_distribution(const Sat2ClassSpec& spec) {
    spec.validate();
    const int m = spec.num_clauses;
    std::vector<double> p(static_cast<std::size_t>(m) + 1);
    // Multiplicative binomial recurrence from p(0) = (3/4)^m.
    double v = std::pow(0.75, m);
    for (int c = 0; c <= m; ++c) {
        p[static_cast<std::size_t>(c)] = v;
        v *= static_cast<double>(m - c) / (3.0 * (c + 1));
    }
    return CostDistribution(CostRange(0, m), std::move(p));
}

NeighbourKernel sat2_kernel(const Sat2ClassSpec& spec) {
    spec.validate();
    const int m = spec.num_clauses;
    const int occ = spec.occurrences_per_var;
    const std::size_t width = static_cast<std::size_t>(m) + 1;

    std::vector<double> pn(width * width, 0.0);
    std::vector<std::uint8_t> present(width, 1);

    // Rationals for the per-f binomial split of g true clauses turning
    // false: C(occ-f, g) (1/3)^g (2/3)^(occ-f-g).
    for (int c = 0; c <= m; ++c) {
        std::vector<Rat> row(width, Rat{0, 1});
        for (int f = 0; f <= occ; ++f) {
            // Hypergeometric draw of f false clauses among the variable's
            // occ clauses, without replacement from c false of m.
            Rat pf = Rat::of(1, 1);
            for (int i = 0; i < f; ++i) pf = pf * Rat::of(c - i, 1);
            for (int i = 0; i < occ - f; ++i) pf = pf * Rat::of(m - c - i, 1);
            for (int i = 0; i < occ; ++i) pf = pf * Rat::of(1, m - i);
            pf = pf * Rat::of(binom_small(occ, f), 1);
            if (pf.num == 0) continue;
            const int trials = occ - f;
            for (int g = 0; g <= trials; ++g) {
                Rat pg = Rat::of(binom_small(trials, g), 1);
                for (int i = 0; i < g; ++i) pg = pg * Rat::of(1, 3);
                for (int i = 0; i < trials - g; ++i) pg = pg * Rat::of(2, 3);
                const int c2 = c - f + g;
                row[static_cast<std::size_t>(c2)] = row[static_cast<std::size_t>(c2)] + pf * pg;
            }
        }
        for (int c2 = 0; c2 <= m; ++c2)
            pn[static_cast<std::size_t>(c) * width + c2] = row[static_cast<std::size_t>(c2)].value();
    }

    return NeighbourKernel(CostRange(0, m),
                           NeighbourhoodSize::finite(static_cast<std::uint64_t>(spec.num_vars)),
                           std::move(pn), std::move(present));
}

}  // namespace landscape::models
