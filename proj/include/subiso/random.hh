#ifndef SUBISO_RANDOM_HH
#define SUBISO_RANDOM_HH 1

#include <subiso/rational.hh>

#include <cstdint>
#include <random>

namespace subiso
{
    // std::uniform_int_distribution and friends are implementation defined, so
    // all sampling goes through these two helpers to keep seeds portable.

    /// Unbiased draw in [0, bound) by rejection on raw 64-bit outputs.
    auto uniform_below(std::mt19937_64 & engine, std::uint64_t bound) -> std::uint64_t;

    /// One 64-bit draw r; true iff r < p * 2^64. p is clamped to [0, 1].
    auto bernoulli(std::mt19937_64 & engine, const Rational & p) -> bool;
}

#endif
