#include "landscape/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

#include "kernels_impl.hpp"

namespace landscape::kernels {

namespace detail {

double sum_scalar(std::span<const double> a) {
    const std::size_t n = a.size();
    const std::size_t n4 = n - n % 4;
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (std::size_t i = 0; i < n4; i += 4) {
        s0 += a[i];
        s1 += a[i + 1];
        s2 += a[i + 2];
        s3 += a[i + 3];
    }
    double r = (s0 + s1) + (s2 + s3);
    for (std::size_t i = n4; i < n; ++i) r += a[i];
    return r;
}

double dot_scalar(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    const std::size_t n4 = n - n % 4;
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (std::size_t i = 0; i < n4; i += 4) {
        s0 += a[i] * b[i];
        s1 += a[i + 1] * b[i + 1];
        s2 += a[i + 2] * b[i + 2];
        s3 += a[i + 3] * b[i + 3];
    }
    double r = (s0 + s1) + (s2 + s3);
    for (std::size_t i = n4; i < n; ++i) r += a[i] * b[i];
    return r;
}

double index_weighted_sum_scalar(std::span<const double> a, double i0) {
    const std::size_t n = a.size();
    const std::size_t n4 = n - n % 4;
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (std::size_t i = 0; i < n4; i += 4) {
        const double base = i0 + static_cast<double>(i);
        s0 += a[i] * base;
        s1 += a[i + 1] * (base + 1.0);
        s2 += a[i + 2] * (base + 2.0);
        s3 += a[i + 3] * (base + 3.0);
    }
    double r = (s0 + s1) + (s2 + s3);
    for (std::size_t i = n4; i < n; ++i) r += a[i] * (i0 + static_cast<double>(i));
    return r;
}

void two_opt_deltas_scalar(std::span<const std::int32_t> tour, std::span<const std::int32_t> dist,
                           int num_cities, const MoveTable& moves, std::span<std::int32_t> out) {
    const int n = num_cities;
    const std::size_t m = moves.size();
    for (std::size_t i = 0; i < m; ++i) {
        const std::int32_t ca = tour[moves.a[i]];
        const std::int32_t ca1 = tour[moves.a1[i]];
        const std::int32_t cb = tour[moves.b[i]];
        const std::int32_t cb1 = tour[moves.b1[i]];
        out[i] = dist[ca * n + cb] + dist[ca1 * n + cb1] - dist[ca * n + ca1] - dist[cb * n + cb1];
    }
}

}  // namespace detail

MoveTable two_opt_moves(int num_cities) {
    // Pairs of non-adjacent tour edges (a,a+1) and (b,b+1); adjacent pairs
    // leave the tour unchanged. Count is n(n-3)/2.
    MoveTable t;
    const int n = num_cities;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 2; b < n; ++b) {
            if (a == 0 && b == n - 1) continue;
            t.a.push_back(a);
            t.a1.push_back(a + 1);
            t.b.push_back(b);
            t.b1.push_back((b + 1) % n);
        }
    }
    return t;
}

namespace {

struct Vtable {
    double (*sum)(std::span<const double>);
    double (*dot)(std::span<const double>, std::span<const double>);
    double (*iws)(std::span<const double>, double);
    void (*deltas)(std::span<const std::int32_t>, std::span<const std::int32_t>, int,
                   const MoveTable&, std::span<std::int32_t>);
    Backend backend;
};

constexpr Vtable kScalar{detail::sum_scalar, detail::dot_scalar, detail::index_weighted_sum_scalar,
                         detail::two_opt_deltas_scalar, Backend::scalar};

#if defined(__x86_64__)
constexpr Vtable kAvx2{detail::sum_avx2, detail::dot_avx2, detail::index_weighted_sum_avx2,
                       detail::two_opt_deltas_avx2, Backend::avx2};
#endif

Vtable select_default() {
    if (const char* env = std::getenv("LANDSCAPE_LAB_SIMD")) {
        std::string v(env);
        if (v == "scalar") return kScalar;
#if defined(__x86_64__)
        if (v == "avx2" && cpu_has_avx2()) return kAvx2;
#endif
    }
#if defined(__x86_64__)
    if (cpu_has_avx2()) return kAvx2;
#endif
    return kScalar;
}

Vtable& vtable() {
    static Vtable v = select_default();
    return v;
}

}  // namespace

bool cpu_has_avx2() {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend active_backend() { return vtable().backend; }

void force_backend(Backend b) {
    if (b == Backend::scalar) {
        vtable() = kScalar;
        return;
    }
#if defined(__x86_64__)
    if (cpu_has_avx2()) {
        vtable() = kAvx2;
        return;
    }
#endif
    throw std::runtime_error("requested SIMD backend not available on this CPU");
}

std::string backend_name(Backend b) { return b == Backend::scalar ? "scalar" : "avx2"; }

double sum(std::span<const double> a) { return vtable().sum(a); }

double dot(std::span<const double> a, std::span<const double> b) {
    return vtable().dot(a, b);
}

double index_weighted_sum(std::span<const double> a, double i0) { return vtable().iws(a, i0); }

void two_opt_deltas(std::span<const std::int32_t> tour, std::span<const std::int32_t> dist,
                    int num_cities, const MoveTable& moves, std::span<std::int32_t> out) {
    vtable().deltas(tour, dist, num_cities, moves, out);
}

}  // namespace landscape::kernels
