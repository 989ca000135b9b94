#pragma once

#include <cstdint>
#include <random>

#include "stakeopt/rational.hpp"

namespace stakeopt {

// All seeded sampling in this project runs on std::mt19937_64: its output
// stream is pinned by the standard, so a (seed, code version) pair fully
// determines every Monte Carlo result.

// Uniform draw from {0, 1, ..., bound-1} by masked rejection; exact for any
// positive bound.
inline BigInt uniform_below(std::mt19937_64& gen, const BigInt& bound) {
    if (bound <= 0) throw std::invalid_argument("uniform_below needs a positive bound");
    if (bound == 1) return BigInt(0);
    unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
    if (bits <= 64) {
        std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
        std::uint64_t limit = bound.convert_to<std::uint64_t>();
        for (;;) {
            std::uint64_t v = gen() & mask;
            if (v < limit) return BigInt(v);
        }
    }
    unsigned words = (bits + 63) / 64;
    unsigned top_bits = bits - 64 * (words - 1);
    std::uint64_t top_mask = top_bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
    for (;;) {
        BigInt v = 0;
        for (unsigned w = 0; w < words; ++w) {
            std::uint64_t word = gen();
            if (w + 1 == words) word &= top_mask;
            v |= BigInt(word) << (64 * w);
        }
        if (v < bound) return v;
    }
}

// Exact Bernoulli(p) draw: success iff a uniform draw from {0..den-1} lands
// below num. Unbiased for every rational p in [0,1].
inline bool bernoulli_exact(std::mt19937_64& gen, const Rational& p) {
    if (p.sign() == 0) return false;
    if (p == 1) return true;
    return uniform_below(gen, p.den()) < p.num();
}

}  // namespace stakeopt
