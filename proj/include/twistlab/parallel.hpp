#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace twistlab {

// Index-sharded parallel loop. Each index writes only its own slot in the
// caller's preallocated output, so assembly order never affects results and
// reports stay deterministic regardless of thread count.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw <= 1 || count < 64) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    const std::size_t workers = hw < count ? hw : count;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace twistlab
