#pragma once

#include <cstdint>

namespace gapenergy {

// splitmix64; self-contained so sweeps reproduce bit-for-bit on any platform
inline uint64_t splitmix64_next(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {
        // warm up so nearby seeds decorrelate
        for (int i = 0; i < 4; ++i) splitmix64_next(state_);
    }

    uint64_t next() { return splitmix64_next(state_); }

    // uniform in [0, n), unbiased via rejection
    uint64_t below(uint64_t n) {
        if (n == 0) return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    // uniform in [lo, hi] inclusive
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t state_;
};

// independent stream for trial i of a seeded sweep
inline Rng derive_rng(uint64_t seed, uint64_t stream) {
    uint64_t s = seed;
    splitmix64_next(s);
    s ^= 0xA5A5A5A5DEADBEEFull * (stream + 1);
    return Rng(s);
}

}  // namespace gapenergy
