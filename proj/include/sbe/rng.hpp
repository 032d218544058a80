#ifndef SBE_RNG_HPP
#define SBE_RNG_HPP

#include <cstdint>

namespace sbe {

// splitmix64 output mix (Steele/Lea/Vigna). Every seeded run must be
// bit-identical on every platform, which rules out the standard library's
// distributions; see README.md for the generator contract.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, bound), bound >= 1, without modulo bias
    // (Lemire's multiply-shift rejection).
    std::uint64_t bounded(std::uint64_t bound) {
        unsigned __int128 mul = static_cast<unsigned __int128>(next()) * bound;
        auto low = static_cast<std::uint64_t>(mul);
        if (low < bound) {
            const std::uint64_t threshold = -bound % bound;
            while (low < threshold) {
                mul = static_cast<unsigned __int128>(next()) * bound;
                low = static_cast<std::uint64_t>(mul);
            }
        }
        return static_cast<std::uint64_t>(mul >> 64);
    }

private:
    std::uint64_t state_;
};

// Per-trial seed derivation. Deterministic in (master, a, b) and independent
// of scheduling, so parallel sweeps reproduce bit-identically.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(master ^ mix64(a)) ^ mix64(~b));
}

} // namespace sbe

#endif
