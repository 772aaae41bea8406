#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "zerosum/util.hpp"

namespace zerosum {

//subset of a group's elements; group order is capped at 255 so four words
//always suffice
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(int universe) : n_(uint16_t(universe)) {}

    void add(int e) { bits_[e >> 6] |= uint64_t(1) << (e & 63); }
    void erase(int e) { bits_[e >> 6] &= ~(uint64_t(1) << (e & 63)); }
    bool contains(int e) const { return (bits_[e >> 6] >> (e & 63)) & 1; }
    int universe() const { return n_; }

    int size() const {
        int c = 0;
        for (uint64_t w : bits_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : bits_) if (w) return false;
        return true;
    }

    ElementSet& operator|=(const ElementSet& o) {
        for (int i = 0; i < 4; ++i) bits_[i] |= o.bits_[i];
        return *this;
    }
    ElementSet& operator&=(const ElementSet& o) {
        for (int i = 0; i < 4; ++i) bits_[i] &= o.bits_[i];
        return *this;
    }
    bool operator==(const ElementSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const ElementSet& o) const { return bits_ != o.bits_; }

    //true when every element of this set is also in o
    bool subset_of(const ElementSet& o) const {
        for (int i = 0; i < 4; ++i)
            if (bits_[i] & ~o.bits_[i]) return false;
        return true;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int w = 0; w < 4; ++w) {
            uint64_t v = bits_[w];
            while (v) {
                int b = __builtin_ctzll(v);
                f(w * 64 + b);
                v &= v - 1;
            }
        }
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(size());
        for_each([&](int e) { out.push_back(e); });
        return out;
    }

    uint64_t hash() const {
        uint64_t h = n_;
        for (uint64_t w : bits_) h = hash_combine(h, w);
        return h;
    }

private:
    std::array<uint64_t, 4> bits_{};
    uint16_t n_ = 0;
};

}  // namespace zerosum
