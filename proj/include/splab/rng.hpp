#ifndef SPLAB_RNG_HPP
#define SPLAB_RNG_HPP

#include <cstdint>
#include <random>

namespace splab {

/// splitmix64 step; used to derive independent substream seeds so that
/// trial k of a campaign depends only on (seed, k), not on run order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ (0x632be59bd9b4e019ULL * (stream + 1)));
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    return std::mt19937_64(derive_seed(seed, stream));
}

} // namespace splab

#endif
