#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace aca {

/// Worker count: ACA_WORKERS env var when set, hardware concurrency otherwise.
inline unsigned worker_count() {
    if (const char* env = std::getenv("ACA_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Apply fn to every index in [0, count), splitting into contiguous chunks.
/// fn must be safe to call concurrently for distinct indices.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& chunk_fn) {
    const unsigned workers = worker_count();
    if (workers <= 1 || count < 2048) {
        chunk_fn(0, count);
        return;
    }
    const std::size_t per = (count + workers - 1) / workers;
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = w * per;
        if (lo >= count) break;
        const std::size_t hi = std::min(count, lo + per);
        threads.emplace_back(chunk_fn, lo, hi);
    }
    for (auto& t : threads) t.join();
}

}  // namespace aca
