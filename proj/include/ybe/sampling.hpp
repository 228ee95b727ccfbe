#pragma once

#include <cstdint>
#include <random>

#include "ybe/identities.hpp"

namespace ybe {

// Seeded generator with a portable uniform: the standard distributions are
// implementation-defined, so doubles are built from the top 53 bits.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    double uniform() { return double(eng_() >> 11) * 0x1.0p-53; }  // [0, 1)
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    long integer(long lo, long hi);  // inclusive

private:
    std::mt19937_64 eng_;
};

// splitmix64 of (base, index): independent per-sample seeds
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// A random admissible case of the given kind. Same seed, same case.
IdentityCase sample_case(IdentityKind kind, std::uint64_t seed);

}  // namespace ybe
