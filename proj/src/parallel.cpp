#include "flns/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace flns {

int worker_count() {
    static int cached = [] {
        int hw = static_cast<int>(std::thread::hardware_concurrency());
        if (hw < 1) hw = 1;
        const char* env = std::getenv("FL_NSE_THREADS");
        if (!env || !*env) return hw;
        int requested = 0;
        try {
            requested = std::stoi(env);
        } catch (...) {
            return hw;
        }
        if (requested <= 0) return hw; // 0 = auto
        return std::min(requested, hw);
    }();
    return cached;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body) {
    int workers = worker_count();
    if (workers <= 1 || count < 1024) {
        body(0, count);
        return;
    }
    std::size_t w = static_cast<std::size_t>(workers);
    std::size_t chunk = (count + w - 1) / w;
    std::vector<std::thread> threads;
    threads.reserve(w);
    for (std::size_t i = 0; i < w; ++i) {
        std::size_t lo = std::min(i * chunk, count);
        std::size_t hi = std::min(lo + chunk, count);
        if (lo >= hi) break;
        threads.emplace_back([&, lo, hi] { body(lo, hi); });
    }
    for (std::thread& t : threads) t.join();
}

} // namespace flns
