#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace landscape {

// Resolve a thread-count flag: 0 means auto (hardware concurrency, at least 1).
inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Run fn(chunk_index, begin, end) over [0, count) split into a fixed chunk
// grid. The grid depends only on `count`, never on the thread count, so
// per-chunk partial results merge in a fixed order and outputs are identical
// for any number of threads.
inline void parallel_chunks(std::uint64_t count, unsigned threads,
                            const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn,
                            std::size_t chunk_count = 64) {
    if (count == 0) return;
    if (chunk_count > count) chunk_count = static_cast<std::size_t>(count);
    const std::uint64_t chunk = (count + chunk_count - 1) / chunk_count;

    threads = resolve_threads(threads);
    if (threads <= 1 || chunk_count == 1) {
        for (std::size_t c = 0; c < chunk_count; ++c) {
            const std::uint64_t b = c * chunk;
            const std::uint64_t e = std::min(count, b + chunk);
            if (b < e) fn(c, b, e);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t c = next.fetch_add(1);
                if (c >= chunk_count) return;
                const std::uint64_t b = c * chunk;
                const std::uint64_t e = std::min(count, b + chunk);
                if (b < e) fn(c, b, e);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace landscape
