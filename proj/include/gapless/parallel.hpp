// Small fan-out helper.  GAPLESS_HECKE_JOBS caps the number of threads.
#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace gapless {

int job_count();

// Calls fn(k) for k in [0, n) on up to job_count() threads.  Results are
// written by index, so the caller sees them in canonical order.
template <class Fn>
void parallel_for(std::size_t n, Fn fn) {
    std::size_t jobs = static_cast<std::size_t>(job_count());
    if (jobs <= 1 || n <= 1) {
        for (std::size_t k = 0; k < n; ++k)
            fn(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(jobs, n); ++t)
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < n; k = next++)
                fn(k);
        });
    for (auto& th : pool)
        th.join();
}

}  // namespace gapless
