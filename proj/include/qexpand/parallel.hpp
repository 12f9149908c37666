#ifndef QEXPAND_PARALLEL_HPP
#define QEXPAND_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace qexpand
{

// out[i] = f(i) for i < n on a small worker pool. Results keep index order; the first exception is rethrown.
// Workers start with the default precision; f must open its own precision_scope.
template <typename T>
std::vector<T> parallel_map(size_t n, const std::function<T(size_t)> &f, unsigned workers = 0)
{
    std::vector<T> out(n);
    if (!workers) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<size_t>(workers, std::max<size_t>(n, 1)));
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    auto run = [&] {
        for (size_t i; (i = next++) < n;) {
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(mu);
                if (!err) err = std::current_exception();
                next = n;
            }
        }
    };
    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto &t : pool) t.join();
    }
    if (err) std::rethrow_exception(err);
    return out;
}

} // namespace qexpand

#endif
