#include "hopfq/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace hopfq {

int thread_budget() {
    const char* env = std::getenv("HOPFQ_THREADS");
    if (!env || !*env) return 1;
    int n = std::atoi(env);
    return n < 1 ? 1 : n;
}

namespace {
thread_local bool in_parallel_region = false;
}

void parallel_for(long n, const std::function<void(long)>& fn) {
    const int budget = thread_budget();
    if (n <= 0) return;
    if (budget <= 1 || n == 1 || in_parallel_region) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    const int workers = static_cast<int>(std::min<long>(budget, n));
    std::atomic<long> next{0};
    std::vector<std::exception_ptr> errors(static_cast<size_t>(n));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            in_parallel_region = true;
            for (long i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    errors[static_cast<size_t>(i)] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace hopfq
