#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace falsetheta {

/// Worker cap: min(hardware threads, FALSETHETA_THREADS when set), at least 1.
int thread_budget();

/// Runs fn(i) for i in [0, n) across the thread budget.  fn must be safe to
/// call concurrently for distinct i; iteration order within a worker is
/// ascending so callers can merge deterministically afterwards.
template <typename Fn>
void parallel_for_index(std::int64_t n, Fn&& fn) {
    const int workers = std::min<std::int64_t>(thread_budget(), n);
    if (workers <= 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&fn, w, workers, n] {
            for (std::int64_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace falsetheta
