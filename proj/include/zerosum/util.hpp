#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace zerosum {

//saturating binomial coefficient; values above 2^62 clamp so comparisons
//against enumeration caps stay safe
inline uint64_t binomial(uint64_t n, uint64_t k) {
    constexpr uint64_t kSat = uint64_t(1) << 62;
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > kSat) return kSat;
    }
    return uint64_t(acc);
}

//number of multisets of size len over n element types
inline uint64_t multiset_count(uint64_t n, uint64_t len) {
    if (n == 0) return len == 0 ? 1 : 0;
    return binomial(len + n - 1, n - 1);
}

//splitmix64, used to derive per-trial seeds and as a portable hash mixer
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t hash_combine(uint64_t h, uint64_t v) {
    return mix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

//deterministic xorshift-based generator; std distributions are avoided so
//streams are identical across platforms and thread counts
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(mix64(seed ^ 0x6a09e667f3bcc908ULL)) {}

    uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_ * 0x2545f4914f6cdd1dULL;
    }

    //uniform in [0, bound)
    uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

private:
    uint64_t state_;
};

//fixed default seed for a named check, reported in every randomized result
inline uint64_t default_seed(const std::string& check_name) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : check_name) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace zerosum
