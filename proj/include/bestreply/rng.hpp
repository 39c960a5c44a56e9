#pragma once

#include <cstdint>
#include <random>

namespace bestreply {

// Deterministic random source used by the instance generator and the
// adversarial search. The raw mt19937_64 output sequence is fully specified
// by the standard, so seeded byte-for-byte reproducibility holds across
// platforms. The derived draws below deliberately avoid
// std::uniform_*_distribution, whose algorithms are implementation-defined;
// together with the engine they are part of the format contract.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform integer in [0, n) via 128-bit multiply-high range mapping.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Uniform real in [0, 1) with 53 random bits.
    double real01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 eng_;
};

} // namespace bestreply
