#include "tlcp/config.hpp"

#include <cstdlib>
#include <string>

#include "tlcp/errors.hpp"

namespace tlcp {

int enumeration_cap() {
    static const int cap = [] {
        const char* env = std::getenv("TLCP_ENUM_CAP");
        if (!env) return kDefaultEnumerationCap;
        try {
            int v = std::stoi(env);
            return v >= 1 ? v : kDefaultEnumerationCap;
        } catch (...) {
            return kDefaultEnumerationCap;
        }
    }();
    return cap;
}

void require_within_cap(std::size_t flat_dimension, int cap) {
    if (cap < 1 || flat_dimension > static_cast<std::size_t>(cap)) {
        throw DimensionCapExceededError(
            "flattened dimension " + std::to_string(flat_dimension) +
            " exceeds the enumeration cap " + std::to_string(cap) +
            " (raise TLCP_ENUM_CAP or pass a larger cap to override)");
    }
}

void require_enumerable(std::size_t flat_dimension, int cap) {
    require_within_cap(flat_dimension, cap);
    constexpr std::size_t hard_limit = 20;
    if (flat_dimension > hard_limit) {
        throw DimensionCapExceededError("flattened dimension " + std::to_string(flat_dimension) +
                                        " exceeds the hard enumeration limit " +
                                        std::to_string(hard_limit));
    }
}

} // namespace tlcp
