#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace landscape::kernels {

// Reduction kernels behind the probability sums, expected-improvement dot
// products and 2-opt cost-delta scans. Two backends: a scalar reference and
// an AVX2 variant picked at runtime. Both follow the same striped-accumulator
// evaluation order, so results are bit-identical across backends (the
// equivalence tests assert exact equality, not a tolerance).

enum class Backend { scalar, avx2 };

Backend active_backend();
// Force a backend (tests / LANDSCAPE_LAB_SIMD env var). Throws if the CPU
// lacks the requested instruction set.
void force_backend(Backend b);
bool cpu_has_avx2();

// sum(a) = a[0] + ... + a[n-1]
double sum(std::span<const double> a);

// dot(a, b) = sum of a[i]*b[i]
double dot(std::span<const double> a, std::span<const double> b);

// index_weighted_sum(a, i0) = sum of a[j]*(i0 + j)
double index_weighted_sum(std::span<const double> a, double i0);

// 2-opt moves on a tour, stored as structure-of-arrays of the four edge
// endpoint positions: removing edges (a,a1),(b,b1) and adding (a,b),(a1,b1).
struct MoveTable {
    std::vector<std::int32_t> a, a1, b, b1;
    std::size_t size() const { return a.size(); }
};

MoveTable two_opt_moves(int num_cities);

// Cost change of every move in the table applied to `tour`, with dist the
// flattened num_cities x num_cities edge length matrix.
void two_opt_deltas(std::span<const std::int32_t> tour, std::span<const std::int32_t> dist,
                    int num_cities, const MoveTable& moves, std::span<std::int32_t> out);

std::string backend_name(Backend b);

}  // namespace landscape::kernels
