#ifndef EDGEMAP_PARALLEL_HPP
#define EDGEMAP_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace edgemap::detail {

inline int resolve_workers(int requested) {
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("EDGEMAP_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// fn(i) for i in [0, count), work-stealing by atomic counter. The first
// exception wins and is rethrown after all workers stop.
template <typename Fn>
void parallel_for(int count, int workers, Fn&& fn) {
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                int i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!err)
                        err = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (auto& t : threads)
        t.join();
    if (err)
        std::rethrow_exception(err);
}

} // namespace edgemap::detail

#endif
