#pragma once
// Bounded worker pool over an index range. Results land in pre-sized slots,
// so output order is independent of thread scheduling; the mapped function
// must be a pure function of its item for deterministic pipelines.

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace sandpipe {

template <typename Item, typename Fn>
auto parallel_map(const std::vector<Item>& items, std::size_t workers, Fn&& fn)
    -> std::vector<decltype(fn(items[std::size_t{0}], std::size_t{0}))> {
    using Out = decltype(fn(items[std::size_t{0}], std::size_t{0}));
    std::vector<Out> results(items.size());
    if (items.empty()) return results;
    if (workers == 0) workers = 1;
    if (workers > items.size()) workers = items.size();

    if (workers == 1) {
        for (std::size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i], i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= items.size()) break;
                try {
                    results[i] = fn(items[i], i);
                } catch (...) {
                    bool expected = false;
                    if (failed.compare_exchange_strong(expected, true)) {
                        first_error = std::current_exception();
                    }
                    break;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

}  // namespace sandpipe
