#pragma once

#include <cstdint>
#include <string_view>

namespace hz {

/// SplitMix64. Seedable, splittable, and identical across platforms, so
/// campaign reports replay bit-for-bit from their recorded seed.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed = 0) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). bound must be positive.
    uint64_t below(uint64_t bound) {
        // rejection sampling to avoid modulo bias
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    int range(int lo, int hi_inclusive) {  // lo <= hi
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi_inclusive - lo + 1)));
    }

    bool coin() { return next() & 1; }

    /// Child generator independent of this one; deterministic in (state, key).
    SplitMix64 split(uint64_t key) const {
        SplitMix64 child(state_ ^ (0x9e3779b97f4a7c15ULL * (key + 1)));
        child.next();
        return child;
    }

    SplitMix64 split(std::string_view key) const {
        uint64_t h = 1469598103934665603ULL;  // FNV-1a
        for (char c : key) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ULL;
        }
        return split(h);
    }

private:
    uint64_t state_;
};

}  // namespace hz
