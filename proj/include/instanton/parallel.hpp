#pragma once

#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace inst {

// Worker count from INSTANTON_WORKERS, else the hardware concurrency.
inline int worker_count()
{
    if (const char* env = std::getenv("INSTANTON_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

// Evaluates f(0..n-1) into a vector. Each index is computed by exactly one
// worker and results are stored by index, so the output does not depend on
// scheduling.
template <class R>
std::vector<R> parallel_map(int n, const std::function<R(int)>& f)
{
    std::vector<R> out(n);
    int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int k = 0; k < n; ++k) out[k] = f(k);
        return out;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int k = w; k < n; k += workers) out[k] = f(k);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace inst
