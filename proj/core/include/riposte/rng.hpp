#pragma once

/**
 * Deterministic random streams for the Monte Carlo engine.
 *
 * Generator: splitmix64 (Steele/Lea/Flood). Every draw comes from its own
 * substream keyed by (seed, iteration, component), so a simulation produces
 * bit-identical samples no matter how iterations are scheduled across
 * threads. No wall-clock or OS entropy is used anywhere.
 */

#include <cstdint>
#include <string_view>

namespace riposte {

inline constexpr std::string_view kGeneratorName = "splitmix64";

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

/// splitmix64 output function (a bijective 64-bit finalizer).
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace detail

/// 64 random bits for the given (seed, iteration, component) key.
inline std::uint64_t substream_bits(std::uint64_t seed, std::uint64_t iteration,
                                    std::uint64_t component) {
    std::uint64_t s = seed;
    s = detail::splitmix64_mix(s + detail::kGolden * (iteration + 1));
    s = detail::splitmix64_mix(s + detail::kGolden * (component + 1));
    return s;
}

/// Uniform double in [0, 1) built from the top 53 bits.
inline double u01_from_bits(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Uniform draw in [0, 1) for the given substream key.
inline double substream_u01(std::uint64_t seed, std::uint64_t iteration,
                            std::uint64_t component) {
    return u01_from_bits(substream_bits(seed, iteration, component));
}

}  // namespace riposte
