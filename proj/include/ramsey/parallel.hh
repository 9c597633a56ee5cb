#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ramsey
{
    /// Runs body(i) for every i in [0, count) on up to `threads` workers (0 = hardware concurrency).
    /// The first exception thrown by any task is rethrown once all workers have stopped.
    template <typename Body>
    auto parallel_for(std::size_t count, unsigned threads, Body && body) -> void
    {
        if (threads == 0)
            threads = std::max(1u, std::thread::hardware_concurrency());
        threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

        if (threads <= 1) {
            for (std::size_t i = 0; i < count; ++i)
                body(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        {
            std::vector<std::jthread> workers;
            for (unsigned t = 0; t < threads; ++t)
                workers.emplace_back([&] {
                    for (std::size_t i = next++; i < count; i = next++) {
                        try {
                            body(i);
                        }
                        catch (...) {
                            std::lock_guard lock{failure_mutex};
                            if (! failure)
                                failure = std::current_exception();
                            next = count;
                        }
                    }
                });
        }
        if (failure)
            std::rethrow_exception(failure);
    }
}
