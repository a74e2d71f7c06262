#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace farey {

// Data-parallel loop over [begin, end): f(i) runs exactly once per index.
// Indices are pulled from an atomic counter and results must be written to
// per-index slots, which keeps every output independent of the thread count.
template <class F>
void parallel_for(uint64_t begin, uint64_t end, unsigned threads, F&& f) {
    if (end <= begin) return;
    if (threads <= 1 || end - begin == 1) {
        for (uint64_t i = begin; i < end; ++i) f(i);
        return;
    }
    std::atomic<uint64_t> next{begin};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    auto worker = [&] {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= end) return;
            try {
                f(i);
            } catch (...) {
                std::scoped_lock lk(err_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace farey
