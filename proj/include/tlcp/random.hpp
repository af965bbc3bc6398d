#pragma once

#include <cstdint>
#include <random>

#include "tlcp/tensor.hpp"

namespace tlcp {

// Engine for stream `stream` of master seed `seed`. Streams are decorrelated
// by a splitmix64 scramble so harness iterations draw independently.
std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t stream);

// Uniform integer in [lo, hi] via rejection sampling on the raw 64-bit
// stream. std::uniform_int_distribution is not reproducible across standard
// library implementations; this is.
long rand_int(std::mt19937_64& rng, long lo, long hi);

DenseTensor random_integer_tensor(std::mt19937_64& rng, const Shape& shape, long lo, long hi);

// Order-2m cubical tensor whose flattening is G^T G for a random integer G;
// symmetric positive semidefinite by construction.
DenseTensor random_block_symmetric_psd(std::mt19937_64& rng, int m, int n, long lo, long hi);

} // namespace tlcp
