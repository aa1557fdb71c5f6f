#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ctxg::util {

// Run fn(0..n-1) across up to `jobs` worker threads. Work items must be
// independent; results must be written to per-index slots so the outcome is
// identical for any worker count. If any item throws, the exception for the
// smallest index is rethrown after all workers stop, matching what a serial
// run would surface first.
inline void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& fn) {
    if (jobs < 1) jobs = 1;
    const size_t workers = std::min<size_t>(static_cast<size_t>(jobs), n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex mu;
    size_t first_bad = SIZE_MAX;
    std::exception_ptr first_err;

    auto body = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n || failed.load(std::memory_order_relaxed)) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (i < first_bad) {
                    first_bad = i;
                    first_err = std::current_exception();
                }
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (first_err) std::rethrow_exception(first_err);
}

} // namespace ctxg::util
