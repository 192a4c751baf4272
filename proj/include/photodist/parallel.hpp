#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace photodist {

// Evaluates f(0) .. f(count-1) on a small thread pool and returns the results
// in index order, so output does not depend on scheduling. The first
// exception thrown by any cell is rethrown after all workers stop.
template <class F>
auto parallel_map(size_t count, F f, unsigned threads = 0) -> std::vector<decltype(f(size_t{}))> {
    using R = decltype(f(size_t{}));
    std::vector<R> out(count);
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<size_t>(threads, std::max<size_t>(count, 1)));

    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next.store(count);
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    if (error)
        std::rethrow_exception(error);
    return out;
}

} // namespace photodist
