#pragma once

#include <cstddef>

namespace tlcp {

// Enumeration procedures are exponential in the flattened dimension N.
// Entry points guard N against this cap. Override with TLCP_ENUM_CAP.
inline constexpr int kDefaultEnumerationCap = 12;

// Cap from the environment (TLCP_ENUM_CAP), or the default. Read once.
int enumeration_cap();

// Throws DimensionCapExceededError if flat_dimension > cap.
void require_within_cap(std::size_t flat_dimension, int cap);

// require_within_cap plus the hard ceiling that keeps 3^N * N and 1 << N
// inside 64 bits for the pattern scanners.
void require_enumerable(std::size_t flat_dimension, int cap);

} // namespace tlcp
