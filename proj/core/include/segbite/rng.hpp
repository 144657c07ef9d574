#pragma once

#include <cstdint>
#include <random>

namespace segbite {

/// All randomized machinery in the toolkit draws from std::mt19937_64,
/// whose output sequence is fixed by the C++ standard, combined with the
/// multiply-shift bounded draw below. Standard-library distributions are
/// avoided because their output is implementation defined; this keeps
/// seeds portable across compilers and platforms.
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
    const unsigned __int128 wide = static_cast<unsigned __int128>(rng()) * bound;
    return static_cast<std::uint64_t>(wide >> 64);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

} // namespace segbite
