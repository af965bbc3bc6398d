#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <vector>

namespace tlcp::scan {

// Execution mode for the search/map kernels. Parallel uses OpenMP; results
// are identical to Serial because reductions are order-insensitive.
enum class Mode { Serial, Parallel };

bool parallel_available();

// Process-wide default: TLCP_SCAN=serial|parallel, else Parallel when built
// with OpenMP.
Mode default_mode();
void set_default_mode(Mode m);

// Smallest i in [0, count) with pred(i) true, or nullopt. pred must be pure;
// in Parallel mode it runs out of order and concurrently.
std::optional<std::size_t> first_hit(std::size_t count,
                                     const std::function<bool(std::size_t)>& pred, Mode mode);

inline std::optional<std::size_t> first_hit(std::size_t count,
                                            const std::function<bool(std::size_t)>& pred) {
    return first_hit(count, pred, default_mode());
}

// fn(i) for every i in [0, count), results kept in index order. fn must be
// pure. T must be default-constructible.
template <typename T, typename F>
std::vector<T> map_indexed(std::size_t count, F&& fn, Mode mode) {
    std::vector<T> out(count);
#ifdef _OPENMP
    if (mode == Mode::Parallel) {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            try {
                out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical
                {
                    if (!err) err = std::current_exception();
                }
            }
        }
        if (err) std::rethrow_exception(err);
        return out;
    }
#endif
    (void)mode;
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
}

template <typename T, typename F>
std::vector<T> map_indexed(std::size_t count, F&& fn) {
    return map_indexed<T>(count, std::forward<F>(fn), default_mode());
}

} // namespace tlcp::scan
