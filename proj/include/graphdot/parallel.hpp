#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace graphdot {

/// Worker count for parallel_for: hardware concurrency, capped by the
/// GRAPHDOT_THREADS environment variable when set (0 or 1 disables threading).
inline int thread_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("GRAPHDOT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 0) hw = std::min<long>(hw, std::max<long>(v, 1));
    }
    return hw;
}

/// Runs body(i) for i in [begin, end) across worker threads. Deterministic as
/// long as each iteration writes only to its own index's outputs; iteration
/// order is unspecified. Falls back to a plain loop when one thread suffices.
/// An exception thrown by any iteration stops the sweep and is rethrown here.
template <typename Body>
void parallel_for(std::int64_t begin, std::int64_t end, Body&& body) {
    const std::int64_t total = end - begin;
    if (total <= 0) return;
    const int workers = static_cast<int>(std::min<std::int64_t>(thread_count(), total));
    if (workers <= 1) {
        for (std::int64_t i = begin; i < end; ++i) body(i);
        return;
    }
    std::atomic<std::int64_t> next{begin};
    std::atomic<bool> stop{false};
    std::mutex fail_mutex;
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            try {
                for (std::int64_t i = next.fetch_add(1); i < end; i = next.fetch_add(1)) {
                    if (stop.load(std::memory_order_relaxed)) break;
                    body(i);
                }
            } catch (...) {
                stop.store(true, std::memory_order_relaxed);
                const std::lock_guard<std::mutex> lock(fail_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace graphdot
