#pragma once

#include <cstdint>
#include <cstdlib>

namespace gapenergy::limits {

// Memory ceiling for enumeration structures (dense tables, point lists).
// Override with GAPENERGY_MAX_MEM (bytes).
inline uint64_t max_mem_bytes() {
    static const uint64_t cached = [] {
        if (const char* env = std::getenv("GAPENERGY_MAX_MEM")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && v > 0) return static_cast<uint64_t>(v);
        }
        return uint64_t(4) << 30;  // 4 GiB default
    }();
    return cached;
}

inline constexpr uint64_t kGapEnumerationCap = 100'000'000;   // index tuples
inline constexpr uint64_t kLatticeCountCap = 10'000'000;      // expected |L ∩ B|
inline constexpr uint64_t kEnergyPairCap = 100'000'000;       // |A|^2
inline constexpr int64_t kCharTablePrimeCap = 10'000'000;     // dlog table size
inline constexpr int64_t kBohrScanPrimeCap = 10'000'000;
inline constexpr int64_t kFullZScanPrimeCap = 100'000;

}  // namespace gapenergy::limits
