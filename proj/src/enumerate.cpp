#include "zerosum/enumerate.hpp"

namespace zerosum {

uint64_t canonical_rank(const GSequence& s) {
    int n = s.universe();
    uint64_t rank = 0;
    uint64_t placed = 0;
    int lb = 0;
    for (int e = 0; e < n; ++e) {
        for (uint32_t rep = 0; rep < s.counts[e]; ++rep) {
            uint64_t rest = s.length - placed - 1;
            for (int g = lb; g < e; ++g) rank += multiset_count(uint64_t(n - g), rest);
            lb = e;
            ++placed;
        }
    }
    return rank;
}

}  // namespace zerosum
