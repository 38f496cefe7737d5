#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace kschur {

// Runs fn(0..n-1) on up to `jobs` worker threads. fn must be safe to call
// concurrently for distinct indices; callers get determinism by writing into
// pre-sized, index-addressed slots.
inline void parallel_for(long long n, int jobs,
                         const std::function<void(long long)>& fn) {
    if (n <= 0) return;
    if (jobs < 1) jobs = 1;
    jobs = static_cast<int>(std::min<long long>(jobs, n));
    if (jobs == 1) {
        for (long long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&] {
            while (true) {
                long long i = next.fetch_add(1);
                if (i >= n || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    if (failed.load()) std::rethrow_exception(error);
}

}  // namespace kschur
