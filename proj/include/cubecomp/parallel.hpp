#ifndef CUBECOMP_PARALLEL_HPP
#define CUBECOMP_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace cubecomp {

/// Worker count: CUBECOMP_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
inline unsigned thread_count()
{
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    char const * env = std::getenv("CUBECOMP_THREADS");
    if (env == nullptr || *env == '\0')
        return hw;
    char * end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0)
        return hw;
    return static_cast<unsigned>(std::min<long>(v, 1024));
}

/// Runs body(i) for i in [0, n) over contiguous chunks. Every index is handled
/// exactly once; callers write into per-index slots so results never depend on
/// scheduling. The first exception thrown by any worker is rethrown.
template <class Body>
void parallel_for(std::size_t n, Body && body, unsigned threads = thread_count())
{
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_lock;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t lo = n * t / threads;
        std::size_t hi = n * (t + 1) / threads;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i)
                    body(i);
            } catch (...) {
                std::lock_guard<std::mutex> guard(failure_lock);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    for (auto & th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace cubecomp

#endif // CUBECOMP_PARALLEL_HPP
