#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace copwin::detail {

// Dynamic bitset sized at construction; just the operations the solvers need.
struct DynBits {
    std::vector<uint64_t> w;

    DynBits() = default;
    explicit DynBits(int n) : w((n + 63) / 64, 0) {}

    void set(int i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    bool subset_of(const DynBits& other) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~other.w[i]) return false;
        return true;
    }

    // (this & mask) subset of other
    bool masked_subset_of(const DynBits& mask, const DynBits& other) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & mask.w[i] & ~other.w[i]) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (uint64_t word : w) c += std::popcount(word);
        return c;
    }
};

}  // namespace copwin::detail
