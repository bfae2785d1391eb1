#include "sw/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sw {

namespace {
std::atomic<int> g_default_jobs{0};
}

void set_default_jobs(int jobs) { g_default_jobs = jobs; }

int resolve_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SW_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int default_jobs() { return resolve_jobs(g_default_jobs.load()); }

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t, int)>& body) {
    if (jobs <= 0) jobs = default_jobs();
    if (jobs == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i, 0);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&](int id) {
        for (;;) {
            if (failed) return;
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i, id);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
                failed = true;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace sw
