#pragma once

#include <cassert>
#include <cstdint>
#include <random>

#include "pscvote/rational.hpp"

namespace pscvote {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seedable deterministic stream. Substreams are derived with splitmix64 so
// that independent draws (e.g. parallel sampling) stay reproducible: the
// i-th substream of a seed is a pure function of (seed, i).
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : gen_(splitmix64(seed)) {}

    static RngStream substream(std::uint64_t seed, std::uint64_t index) {
        return RngStream(splitmix64(seed) ^ splitmix64(index + 0x51ed270b7a4c1a6dULL));
    }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, bound), bound >= 1. Rejection sampling on the top word,
    // so the distribution is exactly uniform.
    std::uint64_t uniform_u64(std::uint64_t bound) {
        assert(bound >= 1);
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t draw;
        do {
            draw = next_u64();
        } while (draw >= limit);
        return draw % bound;
    }

    // Uniform big integer in [0, bound), exact via bit-masked rejection.
    BigInt uniform_below(const BigInt& bound) {
        assert(bound >= 1);
        if (bound == 1) {
            return 0;
        }
        const unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
        const unsigned words = (bits + 63) / 64;
        const unsigned top_bits = bits - 64 * (words - 1);
        const std::uint64_t top_mask =
            top_bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
        while (true) {
            BigInt value = 0;
            for (unsigned w = 0; w < words; ++w) {
                std::uint64_t word = next_u64();
                if (w == words - 1) {
                    word &= top_mask;
                }
                value |= BigInt(word) << (64 * w);
            }
            if (value < bound) {
                return value;
            }
        }
    }

    // Exact Bernoulli: probability p must lie in [0, 1].
    bool bernoulli(const Rational& p) {
        assert(p >= 0 && p <= 1);
        if (p == 0) {
            return false;
        }
        if (p == 1) {
            return true;
        }
        return uniform_below(denominator(p)) < numerator(p);
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace pscvote
