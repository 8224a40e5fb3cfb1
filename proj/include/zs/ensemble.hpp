#pragma once
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace zs {

inline int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Deterministic parallel map: fn(index) -> T written into a fixed slot, so the
// result is independent of the thread count. Seeding per index is the caller's
// responsibility (mix_seed(master, index)).
template <class T, class Fn>
std::vector<T> parallel_map(int n, int threads, Fn&& fn) {
    std::vector<T> out(n);
    threads = std::min(resolve_threads(threads), std::max(n, 1));
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n || failed.load()) return;
                try {
                    out[i] = fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) err = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

} // namespace zs
