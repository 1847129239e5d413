#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace dfraud {

// splitmix64 finalizer
inline uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

inline uint64_t fnv1a(std::string_view s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Deterministic RNG used for every random choice in the library. std
// engines are portable but the std distributions are not, so draws are
// implemented here directly; identical seeds reproduce bit-for-bit on
// any platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), state_(seed + 0x9e3779b97f4a7c15ULL) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // uniform in [0, 1)
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    // uniform in [0, n); modulo bias is negligible at the sizes used here
    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(next() % n); }

    // Independent stream derived from the seed only, not from draws made
    // so far; keyed children make sampling order-independent.
    Rng child(std::string_view label) const { return Rng(mix64(seed_ ^ fnv1a(label))); }
    Rng child(uint64_t a) const { return Rng(mix64(seed_ ^ mix64(a + 0x632be59bd9b4e019ULL))); }
    Rng child(uint64_t a, uint64_t b) const { return child(a).child(b); }

    uint64_t seed() const { return seed_; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        if (v.size() < 2) return;
        for (std::size_t i = v.size() - 1; i > 0; --i) {
            std::size_t j = below(i + 1);
            using std::swap;
            swap(v[i], v[j]);
        }
    }

private:
    uint64_t seed_;
    uint64_t state_;
};

} // namespace dfraud
