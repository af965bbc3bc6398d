#include "tlcp/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tlcp::scan {

bool parallel_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

namespace {

Mode initial_mode() {
    if (const char* env = std::getenv("TLCP_SCAN")) {
        if (std::strcmp(env, "serial") == 0) return Mode::Serial;
        if (std::strcmp(env, "parallel") == 0) return Mode::Parallel;
    }
    return parallel_available() ? Mode::Parallel : Mode::Serial;
}

Mode g_mode = initial_mode();

} // namespace

Mode default_mode() {
    return g_mode;
}

void set_default_mode(Mode m) {
    g_mode = m;
}

std::optional<std::size_t> first_hit(std::size_t count,
                                     const std::function<bool(std::size_t)>& pred, Mode mode) {
#ifdef _OPENMP
    if (mode == Mode::Parallel && count > 1) {
        // Waves of independent evaluations; the first wave containing a hit
        // determines the answer, and the minimum within a wave is exact, so
        // the result matches the serial scan.
        const std::size_t wave =
            std::max<std::size_t>(16, static_cast<std::size_t>(omp_get_max_threads()) * 8);
        std::exception_ptr err;
        for (std::size_t base = 0; base < count; base += wave) {
            const std::size_t end = std::min(count, base + wave);
            std::atomic<std::size_t> best{count};
#pragma omp parallel for schedule(dynamic)
            for (long long i = static_cast<long long>(base); i < static_cast<long long>(end);
                 ++i) {
                try {
                    if (pred(static_cast<std::size_t>(i))) {
                        std::size_t idx = static_cast<std::size_t>(i);
                        std::size_t cur = best.load();
                        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                        }
                    }
                } catch (...) {
#pragma omp critical
                    {
                        if (!err) err = std::current_exception();
                    }
                }
            }
            if (err) std::rethrow_exception(err);
            if (best.load() < count) return best.load();
        }
        return std::nullopt;
    }
#endif
    (void)mode;
    for (std::size_t i = 0; i < count; ++i) {
        if (pred(i)) return i;
    }
    return std::nullopt;
}

} // namespace tlcp::scan
