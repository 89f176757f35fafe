#include "lqvac/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace lqvac {

namespace {

std::atomic<unsigned> g_override{0};

unsigned env_threads() noexcept {
    if (const char* env = std::getenv("LQVAC_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (...) {
        }
    }
    return 0;
}

constexpr std::size_t kMinChunk = 256;

}  // namespace

unsigned thread_count() noexcept {
    if (const unsigned o = g_override.load(); o > 0) {
        return o;
    }
    if (const unsigned e = env_threads(); e > 0) {
        return e;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void set_thread_count(unsigned n) noexcept { g_override.store(n); }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
    if (n == 0) {
        return;
    }
    const std::size_t workers = std::min<std::size_t>(thread_count(), (n + kMinChunk - 1) / kMinChunk);
    if (workers <= 1) {
        body(0, n);
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (std::size_t w = 1; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    const std::size_t begin = w * chunk;
                    body(begin, std::min(n, begin + chunk));
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        try {
            body(0, std::min(n, chunk));
        } catch (...) {
            errors[0] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace lqvac
