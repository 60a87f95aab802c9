#include <doctest.h>

#include <cmath>

#include "landscape/kernels.hpp"
#include "landscape/models/benchmark.hpp"
#include "landscape/models/lipschitz.hpp"
#include "landscape/models/sat2.hpp"

using namespace landscape;

TEST_CASE("sat2 spec validation") {
    models::Sat2ClassSpec bad;
    bad.occurrences_per_var = 3;
    CHECK_THROWS_AS(models::sat2_distribution(bad), error);
}

TEST_CASE("sat2 distribution") {
    const auto dist = models::sat2_distribution();
    CHECK(dist.range().k_opt == 0);
    CHECK(dist.range().k_max == 100);
    CHECK(dist.k_mod() == 25);
    CHECK(std::abs(dist.p(25) - 0.092) < 0.001);
    CHECK(dist.p(0) == doctest::Approx(std::pow(0.75, 100)).epsilon(1e-12));
    CHECK(kernels::sum(dist.values()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sat2 kernel support and anchor formula") {
    const auto kernel = models::sat2_kernel();
    // all-false draw: every clause of the flipped variable already false
    for (int c : {4, 5, 17, 40, 99}) {
        const double expect = (c / 100.0) * ((c - 1) / 99.0) * ((c - 2) / 98.0) * ((c - 3) / 97.0);
        CHECK(kernel.pn(c, c - 4) == doctest::Approx(expect).epsilon(1e-12));
    }
    // no mass below the optimum or beyond the flip reach
    for (int d = 1; d <= 4; ++d) CHECK(kernel.pn(0, -d) == 0.0);
    for (int c : {0, 17, 50, 100})
        for (int k2 = 0; k2 <= 100; ++k2)
            if (std::abs(k2 - c) > 4) CHECK(kernel.pn(c, k2) == 0.0);
}

TEST_CASE("sat2 kernel row matches a floating-point mixture oracle") {
    const auto kernel = models::sat2_kernel();
    // independent evaluation of the without-replacement draw and the 1/3
    // flip split, in plain doubles
    const int c = 17;
    double row[9] = {0};
    for (int f = 0; f <= 4; ++f) {
        double pf = 1.0;
        for (int i = 0; i < f; ++i) pf *= double(c - i);
        for (int i = 0; i < 4 - f; ++i) pf *= double(100 - c - i);
        for (int i = 0; i < 4; ++i) pf /= double(100 - i);
        double binom = 1.0;
        for (int i = 0; i < f; ++i) binom = binom * (4 - i) / (i + 1);
        pf *= binom;
        for (int g = 0; g <= 4 - f; ++g) {
            double pg = 1.0;
            for (int i = 0; i < g; ++i) pg = pg * (4 - f - i) / (i + 1);
            pg *= std::pow(1.0 / 3, g) * std::pow(2.0 / 3, 4 - f - g);
            row[4 + g - f] += pf * pg;
        }
    }
    for (int d = -4; d <= 4; ++d)
        CHECK(kernel.pn(c, c + d) == doctest::Approx(row[d + 4]).epsilon(1e-12));
}

TEST_CASE("lipschitz kernel windows") {
    const auto uni = models::uniform_distribution(200);
    const auto k10 = models::lipschitz_kernel(uni, 10);
    CHECK(pn_less(k10, 30) == doctest::Approx(10.0 / 21).epsilon(1e-12));
    for (int k : {0, 47, 200})
        for (int k2 = 0; k2 <= 200; ++k2)
            if (std::abs(k2 - k) > 10) CHECK(k10.pn(k, k2) == 0.0);

    // bound covering the whole range reduces to the base distribution
    const auto k200 = models::lipschitz_kernel(uni, 200);
    for (int k2 = 0; k2 <= 200; ++k2)
        CHECK(k200.pn(77, k2) == doctest::Approx(uni.p(k2)).epsilon(1e-12));

    // boundary truncation at the optimum
    const auto k1 = models::lipschitz_kernel(uni, 1);
    CHECK(k1.pn(0, 0) + k1.pn(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k1.pn(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(models::lipschitz_kernel(uni, 0), error);
}

TEST_CASE("clamped window normalization reproduces the untruncated cell") {
    const auto uni = models::uniform_distribution(200);
    CHECK(models::lipschitz_en_imp_clamped(uni, 50, 30, 15) ==
          doctest::Approx(120.0 / 101).epsilon(1e-12));
    CHECK(models::lipschitz_en_imp_clamped(uni, 10, 30, 15) == 0.0);
}

TEST_CASE("benchmark counts and distribution") {
    const auto ct = models::benchmark_counts();
    CHECK(ct.size() == 201);
    CHECK(ct[0] == 1.0);
    CHECK(ct[4] == 50.0);
    CHECK(ct[100] == 126410606437752.0);  // C(50,25)
    CHECK(ct[200] == 1.0);
    for (int k = 1; k <= 100; ++k) CHECK(ct[size_t(k)] >= ct[size_t(k) - 1]);

    const auto dist = models::benchmark_distribution();
    CHECK(dist.k_mod() == 100);
    CHECK(kernels::sum(dist.values()) == doctest::Approx(1.0).epsilon(1e-12));
    // symmetric around the mode
    CHECK(dist.p(60) == doctest::Approx(dist.p(140)).epsilon(1e-12));

    models::BenchmarkClassSpec plateau;
    plateau.interpolation = models::BenchmarkClassSpec::Interpolation::plateau;
    const auto pc = models::benchmark_counts(plateau);
    CHECK(pc[9] == doctest::Approx(1225.25).epsilon(1e-12));
    CHECK(models::benchmark_distribution(plateau).k_mod() == 100);
}
