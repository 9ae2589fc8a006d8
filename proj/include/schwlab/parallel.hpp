#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace schwlab {

/// Worker cap: SCHWARZIAN_LAB_THREADS, with 0 or unset meaning the hardware
/// concurrency.
unsigned worker_count();

/// Runs fn(i) for every i in [0, n), split across workers. fn must only
/// write to its own slot of a preallocated output, so results do not depend
/// on the worker count. The first exception (in chunk order) is rethrown.
template <typename F>
void parallel_index(std::size_t n, F&& fn) {
    const unsigned workers = worker_count();
    if (workers <= 1 || n < 2048) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi)
            break;
        threads.emplace_back([&, lo, hi, w] {
            try {
                for (std::size_t i = lo; i < hi; ++i)
                    fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace schwlab
