#ifndef MZV_PARALLEL_HPP
#define MZV_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace mzv {

// process-wide default used when a call site passes jobs <= 0;
// 0 means hardware concurrency
inline std::atomic<int>& default_jobs() {
    static std::atomic<int> value{0};
    return value;
}
inline void set_default_jobs(int jobs) { default_jobs().store(jobs < 0 ? 0 : jobs); }

inline int effective_jobs(int jobs) {
    if (jobs <= 0) jobs = default_jobs().load();
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(0..n-1) across up to `jobs` threads (jobs <= 0 means hardware
// concurrency).  Callers write results into preallocated slots by index, so
// output ordering never depends on the thread count.
inline void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    int j = effective_jobs(jobs);
    if (j <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(j), n);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        threads.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < n; i += nthreads) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace mzv

#endif
