#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace eitlab::harness {

// 0 means one worker per hardware thread.
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// Evaluates fn(0..n-1) on up to `threads` workers and returns the results in
// index order. If several indices throw, the lowest index's exception is
// rethrown, so the outcome never depends on scheduling.
template <class Fn>
auto parallel_map(std::size_t n, int threads, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using Result = decltype(fn(std::size_t{}));
    std::vector<std::optional<Result>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};

    const auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const std::size_t workers =
        std::min<std::size_t>(n, static_cast<std::size_t>(resolve_threads(threads)));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::vector<Result> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace eitlab::harness
