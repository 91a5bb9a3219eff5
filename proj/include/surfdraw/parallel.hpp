#pragma once

#include <thread>
#include <vector>

namespace surfdraw {

// Deterministic parallel map: results land in index order regardless of the
// worker count or schedule.
template <typename R, typename Fn>
std::vector<R> parallel_map(int n, int jobs, Fn fn) {
    std::vector<R> out(static_cast<std::size_t>(n));
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    int workers = std::min(jobs, n);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (int i = w; i < n; i += workers) out[i] = fn(i);
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace surfdraw
