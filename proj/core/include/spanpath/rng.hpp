#ifndef SPANPATH_RNG_HPP
#define SPANPATH_RNG_HPP

#include <cstdint>
#include <random>

namespace spanpath {

// splitmix64 finalizer. Used to derive independent per-scenario seed streams
// from (base_seed, trial, range index, regeneration attempt).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t trial,
                                 std::uint64_t range_index, std::uint64_t attempt = 0) {
    std::uint64_t s = mix64(base);
    s = mix64(s ^ (0x9e3779b97f4a7c15ull * (trial + 1)));
    s = mix64(s ^ (0xc2b2ae3d27d4eb4full * (range_index + 1)));
    s = mix64(s ^ (0x165667b19e3779f9ull * attempt));
    return s;
}

// Uniform double in [0,1) from the top 53 bits of the engine output.
// std::uniform_real_distribution is not bit-reproducible across standard
// library implementations; this is.
inline double uniform_unit(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& eng, double lo, double hi) {
    return lo + uniform_unit(eng) * (hi - lo);
}

// Bounded draw in [0, n). Modulo bias is irrelevant at simulation scale and
// the result is identical on every platform, unlike uniform_int_distribution.
inline std::uint64_t uniform_below(std::mt19937_64& eng, std::uint64_t n) {
    return eng() % n;
}

} // namespace spanpath

#endif
