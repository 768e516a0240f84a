#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace hsym {

/// Splits [0, n) into at most `jobs` contiguous chunks, runs `work(begin, end)`
/// on each (in worker threads when jobs > 1) and returns the results in chunk
/// order. With jobs <= 1 everything runs on the calling thread.
template <class Result, class Work>
std::vector<Result> parallel_chunks(std::size_t n, unsigned jobs, Work&& work) {
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(jobs == 0 ? 1 : jobs, n));
    std::vector<Result> out(chunks);
    auto bounds = [&](std::size_t c) { return std::pair<std::size_t, std::size_t>(c * n / chunks, (c + 1) * n / chunks); };
    if (chunks == 1) {
        out[0] = work(std::size_t{0}, n);
        return out;
    }
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        threads.emplace_back([&, c] {
            try {
                const auto [b, e] = bounds(c);
                out[c] = work(b, e);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) {
        t.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

} // namespace hsym
