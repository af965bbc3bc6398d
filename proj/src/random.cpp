#include "tlcp/random.hpp"

#include <cstdint>

#include "tlcp/errors.hpp"
#include "tlcp/matrix.hpp"

namespace tlcp {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t state = seed;
    std::uint64_t a = splitmix64(state);
    state ^= stream * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL;
    std::uint64_t b = splitmix64(state);
    return std::mt19937_64(a ^ (b + (stream << 1) + 1));
}

long rand_int(std::mt19937_64& rng, long lo, long hi) {
    if (lo > hi) throw Error("rand_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) throw Error("rand_int: range covers every 64-bit value");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return static_cast<long>(static_cast<std::uint64_t>(lo) + draw % span);
}

DenseTensor random_integer_tensor(std::mt19937_64& rng, const Shape& shape, long lo, long hi) {
    DenseTensor t(shape);
    for (std::size_t p = 0; p < shape.element_count(); ++p)
        t[p] = Rational(rand_int(rng, lo, hi));
    return t;
}

DenseTensor random_block_symmetric_psd(std::mt19937_64& rng, int m, int n, long lo, long hi) {
    if (m < 1 || n < 1) throw Error("random_block_symmetric_psd: m and n must be positive");
    std::size_t big = 1;
    for (int k = 0; k < m; ++k) big *= static_cast<std::size_t>(n);
    Matrix g(big, big);
    for (std::size_t r = 0; r < big; ++r)
        for (std::size_t c = 0; c < big; ++c) g(r, c) = Rational(rand_int(rng, lo, hi));
    const Matrix a = matmul(transpose(g), g);

    DenseTensor t(cubical_shape(2 * m, n));
    for (std::size_t r = 0; r < big; ++r)
        for (std::size_t c = 0; c < big; ++c) t[r * big + c] = a(r, c);
    return t;
}

} // namespace tlcp
