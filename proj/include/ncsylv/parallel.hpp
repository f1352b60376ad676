#ifndef NCSYLV_PARALLEL_HPP
#define NCSYLV_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace ncsylv {

/// Worker count: NCSYLV_THREADS if set to a positive integer, otherwise the
/// hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("NCSYLV_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return unsigned(v);
        } catch (...) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs f(0..n-1). Results must be written to per-index slots so the outcome
/// does not depend on scheduling.
template <class F>
void parallel_for(std::size_t n, F f) {
    unsigned workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace ncsylv

#endif  // NCSYLV_PARALLEL_HPP
