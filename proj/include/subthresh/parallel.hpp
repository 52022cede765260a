#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace subthresh {

/// Thread count to use: `requested` when positive, else SUBTHRESH_THREADS,
/// else the hardware concurrency.
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SUBTHRESH_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

/// Splits [0, count) into one contiguous chunk per worker and calls
/// fn(chunk, begin, end) for each. Chunk boundaries depend on the thread
/// count, so callers must combine per-chunk results with an
/// order-independent reduction.
template <class Fn>
void parallel_chunks(std::uint64_t count, int threads, Fn&& fn) {
    const auto workers = static_cast<std::uint64_t>(
        std::max<std::int64_t>(1, std::min<std::int64_t>(threads, static_cast<std::int64_t>(count))));
    if (workers <= 1) {
        fn(std::size_t{0}, std::uint64_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::uint64_t step = count / workers;
    const std::uint64_t extra = count % workers;
    std::uint64_t begin = 0;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t end = begin + step + (w < extra ? 1 : 0);
        pool.emplace_back([&, w, begin, end] {
            try {
                fn(static_cast<std::size_t>(w), begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

} // namespace subthresh
