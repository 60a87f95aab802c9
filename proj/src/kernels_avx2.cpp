// AVX2 backend. Compiled with -mavx2 only; never reached unless the CPU
// reports AVX2 support. Accumulation order mirrors the scalar backend
// exactly (4 stripes, (s0+s1)+(s2+s3), scalar tail) so results match bit
// for bit.

#if defined(__x86_64__)

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace landscape::kernels::detail {

namespace {

inline double combine(__m256d acc) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace

double sum_avx2(std::span<const double> a) {
    const std::size_t n = a.size();
    const std::size_t n4 = n - n % 4;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < n4; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(a.data() + i));
    }
    double r = combine(acc);
    for (std::size_t i = n4; i < n; ++i) r += a[i];
    return r;
}

double dot_avx2(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    const std::size_t n4 = n - n % 4;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d x = _mm256_loadu_pd(a.data() + i);
        const __m256d y = _mm256_loadu_pd(b.data() + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(x, y));
    }
    double r = combine(acc);
    for (std::size_t i = n4; i < n; ++i) r += a[i] * b[i];
    return r;
}

double index_weighted_sum_avx2(std::span<const double> a, double i0) {
    const std::size_t n = a.size();
    const std::size_t n4 = n - n % 4;
    __m256d acc = _mm256_setzero_pd();
    __m256d idx = _mm256_setr_pd(i0, i0 + 1.0, i0 + 2.0, i0 + 3.0);
    const __m256d four = _mm256_set1_pd(4.0);
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d x = _mm256_loadu_pd(a.data() + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(x, idx));
        idx = _mm256_add_pd(idx, four);
    }
    double r = combine(acc);
    for (std::size_t i = n4; i < n; ++i) r += a[i] * (i0 + static_cast<double>(i));
    return r;
}

void two_opt_deltas_avx2(std::span<const std::int32_t> tour, std::span<const std::int32_t> dist,
                         int num_cities, const MoveTable& moves, std::span<std::int32_t> out) {
    const int n = num_cities;
    const std::size_t m = moves.size();
    const std::size_t m8 = m - m % 8;
    const std::int32_t* tp = tour.data();
    const std::int32_t* dp = dist.data();
    const __m256i nv = _mm256_set1_epi32(n);
    for (std::size_t i = 0; i < m8; i += 8) {
        const __m256i pa = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(moves.a.data() + i));
        const __m256i pa1 =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(moves.a1.data() + i));
        const __m256i pb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(moves.b.data() + i));
        const __m256i pb1 =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(moves.b1.data() + i));
        const __m256i ca = _mm256_i32gather_epi32(tp, pa, 4);
        const __m256i ca1 = _mm256_i32gather_epi32(tp, pa1, 4);
        const __m256i cb = _mm256_i32gather_epi32(tp, pb, 4);
        const __m256i cb1 = _mm256_i32gather_epi32(tp, pb1, 4);
        const __m256i d_ab = _mm256_i32gather_epi32(
            dp, _mm256_add_epi32(_mm256_mullo_epi32(ca, nv), cb), 4);
        const __m256i d_a1b1 = _mm256_i32gather_epi32(
            dp, _mm256_add_epi32(_mm256_mullo_epi32(ca1, nv), cb1), 4);
        const __m256i d_aa1 = _mm256_i32gather_epi32(
            dp, _mm256_add_epi32(_mm256_mullo_epi32(ca, nv), ca1), 4);
        const __m256i d_bb1 = _mm256_i32gather_epi32(
            dp, _mm256_add_epi32(_mm256_mullo_epi32(cb, nv), cb1), 4);
        const __m256i delta = _mm256_sub_epi32(_mm256_add_epi32(d_ab, d_a1b1),
                                               _mm256_add_epi32(d_aa1, d_bb1));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), delta);
    }
    for (std::size_t i = m8; i < m; ++i) {
        const std::int32_t ca = tp[moves.a[i]];
        const std::int32_t ca1 = tp[moves.a1[i]];
        const std::int32_t cb = tp[moves.b[i]];
        const std::int32_t cb1 = tp[moves.b1[i]];
        out[i] = dp[ca * n + cb] + dp[ca1 * n + cb1] - dp[ca * n + ca1] - dp[cb * n + cb1];
    }
}

}  // namespace landscape::kernels::detail

#endif  // __x86_64__
