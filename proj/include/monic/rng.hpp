#ifndef MONIC_RNG_HPP
#define MONIC_RNG_HPP

#include "monic/errors.hpp"

#include <cstdint>
#include <random>

namespace monic {

// Seeded deterministic generator for the randomized checks. Derivations use
// plain modular reduction so outputs are reproducible across platforms;
// reports embed the seed for replay.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform-ish integer in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw Error("empty range in rng");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    bool coin() { return next() & 1; }

private:
    std::mt19937_64 eng_;
};

}  // namespace monic

#endif
