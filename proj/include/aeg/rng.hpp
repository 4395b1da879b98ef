#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace aeg {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stream seed derived from a game seed and a role tag, so the two players
// draw from independent streams.
inline uint64_t derive_stream_seed(uint64_t seed, std::string_view tag) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return splitmix64(seed ^ h);
}

// mt19937_64 with an unbiased bounded draw. uniform_int_distribution is not
// pinned across standard library implementations; this is.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    uint64_t below(uint64_t bound) {
        // rejection sampling on the top range to remove modulo bias
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace aeg
