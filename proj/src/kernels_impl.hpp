#pragma once

#include "landscape/kernels.hpp"

// Backend entry points. Both backends must produce bit-identical results:
// 4 striped partial accumulators combined as (s0+s1)+(s2+s3), then the tail
// elements folded in left to right. No FMA contraction in either path.

namespace landscape::kernels::detail {

double sum_scalar(std::span<const double> a);
double dot_scalar(std::span<const double> a, std::span<const double> b);
double index_weighted_sum_scalar(std::span<const double> a, double i0);
void two_opt_deltas_scalar(std::span<const std::int32_t> tour, std::span<const std::int32_t> dist,
                           int num_cities, const MoveTable& moves, std::span<std::int32_t> out);

#if defined(__x86_64__)
double sum_avx2(std::span<const double> a);
double dot_avx2(std::span<const double> a, std::span<const double> b);
double index_weighted_sum_avx2(std::span<const double> a, double i0);
void two_opt_deltas_avx2(std::span<const std::int32_t> tour, std::span<const std::int32_t> dist,
                         int num_cities, const MoveTable& moves, std::span<std::int32_t> out);
#endif

}  // namespace landscape::kernels::detail
