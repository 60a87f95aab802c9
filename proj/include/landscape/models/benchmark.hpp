#pragma once

#include "landscape/prob.hpp"

namespace landscape::models {

// Benchmark cost-count family over costs 0..4*terms: ct(4k) = C(terms, k),
// intermediate costs interpolated. With `successive` interpolation the
// intermediates run linearly between C(terms,k) and C(terms,k+1); the
// `plateau` variant instead runs between C(terms,k) and C(terms,k)+1,
// leaving each 4-block nearly flat with a jump at the next multiple of 4.
struct BenchmarkClassSpec {
    enum class Interpolation { successive, plateau };
    int terms = 50;
    Interpolation interpolation = Interpolation::successive;

    void validate() const {
        if (terms < 1 || terms > 50)
            raise(errc::invalid_argument, "benchmark terms must be in 1..50");
    }
};

CostDistribution benchmark_distribution(const BenchmarkClassSpec& spec = {});

// Raw counts before normalization (exact integers for 4k costs).
std::vector<double> benchmark_counts(const BenchmarkClassSpec& spec = {});

}  // namespace landscape::models
