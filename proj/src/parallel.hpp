#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace epsmult::detail
{

// Calls f(i) for lo <= i <= hi on up to `threads` workers. The first exception
// thrown by any call is rethrown after all workers stop.
template <typename F>
void parallel_for(int lo, int hi, unsigned threads, F &&f)
{
    if (hi < lo) {
        return;
    }
    const unsigned count = static_cast<unsigned>(hi - lo + 1);
    threads = std::clamp(threads, 1u, count);
    if (threads == 1) {
        for (int i = lo; i <= hi; ++i) {
            f(i);
        }
        return;
    }
    std::atomic<int> next{lo};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (int i = next++; i <= hi && !failed; i = next++) {
            try {
                f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                failed = true;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace epsmult::detail
