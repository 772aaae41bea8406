#pragma once

#include <cstdint>

#include "zerosum/errors.hpp"
#include "zerosum/sequence.hpp"
#include "zerosum/util.hpp"

namespace zerosum {

//canonical enumeration order is ascending lexicographic order of the
//non-decreasing element word, so for each element in turn the LARGEST count
//comes first.  visitors receive a scratch GSequence that must not be
//retained; returning false stops the walk.  each enumerator returns true
//when it ran to completion.

namespace detail {

template <class F>
bool enum_rec(GSequence& s, int e, uint64_t remaining, F& f) {
    int n = s.universe();
    if (remaining == 0) return f(const_cast<const GSequence&>(s));
    if (e == n - 1) {
        s.counts[e] += uint32_t(remaining);
        s.length += remaining;
        bool go = f(const_cast<const GSequence&>(s));
        s.counts[e] -= uint32_t(remaining);
        s.length -= remaining;
        return go;
    }
    for (uint64_t c = remaining + 1; c-- > 0;) {
        s.counts[e] += uint32_t(c);
        s.length += c;
        bool go = enum_rec(s, e + 1, remaining - c, f);
        s.counts[e] -= uint32_t(c);
        s.length -= c;
        if (!go) return false;
    }
    return true;
}

}  // namespace detail

template <class F>
bool enumerate_multisets(int n, uint64_t len, F&& f) {
    GSequence s(n);
    return detail::enum_rec(s, 0, len, f);
}

//multisets whose smallest element is exactly `first`; the partitions over
//first = 0..n-1 tile the full enumeration in canonical order
template <class F>
bool enumerate_multisets_first(int n, uint64_t len, int first, F&& f) {
    if (len == 0) return true;
    GSequence s(n);
    for (uint64_t c = len; c >= 1; --c) {
        s.counts[first] += uint32_t(c);
        s.length += c;
        bool go;
        if (first == n - 1)
            go = (c == len) ? f(const_cast<const GSequence&>(s)) : true;
        else
            go = detail::enum_rec(s, first + 1, len - c, f);
        s.counts[first] -= uint32_t(c);
        s.length -= c;
        if (!go) return false;
    }
    return true;
}

//throws when the level size exceeds the enumeration cap
inline void check_enumeration_budget(int n, uint64_t len, uint64_t cap) {
    uint64_t total = multiset_count(n, len);
    if (total > cap)
        throw ResourceError("enumeration of " + std::to_string(total) +
                            " multisets exceeds cap " + std::to_string(cap));
}

//children s+g for g >= max(support), the unique canonical generation step
template <class F>
void extend_canonical(const GSequence& s, F&& f) {
    int lo = s.max_support();
    if (lo < 0) lo = 0;
    for (int g = lo; g < s.universe(); ++g) f(g);
}

//sub-multisets of s with exactly k terms, canonical order
template <class F>
bool sub_multisets(const GSequence& s, uint64_t k, F&& f) {
    int n = s.universe();
    std::vector<int> sup = s.support();
    std::vector<uint64_t> tail(sup.size() + 1, 0);
    for (size_t i = sup.size(); i-- > 0;) tail[i] = tail[i + 1] + s.counts[sup[i]];
    if (k > tail[0]) return true;
    GSequence t(n);
    //descending count per support element keeps canonical order
    auto rec = [&](auto&& self, size_t i, uint64_t remaining) -> bool {
        if (remaining == 0) return f(const_cast<const GSequence&>(t));
        if (i == sup.size()) return true;
        int e = sup[i];
        uint64_t hi = std::min<uint64_t>(s.counts[e], remaining);
        uint64_t lo = tail[i + 1] >= remaining ? 0 : remaining - tail[i + 1];
        for (uint64_t c = hi + 1; c-- > lo;) {
            t.counts[e] += uint32_t(c);
            t.length += c;
            bool go = self(self, i + 1, remaining - c);
            t.counts[e] -= uint32_t(c);
            t.length -= c;
            if (!go) return false;
        }
        return true;
    };
    return rec(rec, 0, k);
}

//number of distinct sub-multisets of s (all sizes), saturating
inline uint64_t sub_multiset_count(const GSequence& s) {
    constexpr uint64_t kSat = uint64_t(1) << 62;
    unsigned __int128 acc = 1;
    for (int e = 0; e < s.universe(); ++e) {
        if (!s.counts[e]) continue;
        acc *= (unsigned __int128)(s.counts[e]) + 1;
        if (acc > kSat) return kSat;
    }
    return uint64_t(acc);
}

//rank of s within the canonical enumeration of its level; the serial scan
//visits exactly rank+1 multisets before stopping at s, so parallel scans
//report identical work counters
uint64_t canonical_rank(const GSequence& s);

}  // namespace zerosum
