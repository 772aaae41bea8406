#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zerosum/element_set.hpp"

namespace zerosum {

class FiniteGroup;

inline constexpr uint64_t kMaxSequenceLength = 1'000'000;

//unordered sequence (multiset) over a group's element indices, stored as a
//count vector; the count vector is itself the canonical form
struct GSequence {
    std::vector<uint32_t> counts;
    uint64_t length = 0;

    GSequence() = default;
    explicit GSequence(int universe) : counts(size_t(universe), 0) {}

    int universe() const { return int(counts.size()); }
    uint32_t multiplicity(int e) const { return counts[e]; }
    bool empty() const { return length == 0; }

    void add(int e, uint32_t k = 1);
    //throws UsageError when fewer than k copies are present
    void remove(int e, uint32_t k = 1);

    std::vector<int> support() const;
    int max_support() const;  //-1 when empty

    bool operator==(const GSequence& o) const { return counts == o.counts; }

    //key for memo tables: one (element, count) pair per support element
    std::string memo_key() const;
};

GSequence concat(const GSequence& a, const GSequence& b);
//throws UsageError unless b is a subsequence of a
GSequence remove_subsequence(const GSequence& a, const GSequence& b);
//keeps only the terms lying in the given element set
GSequence restrict_to(const GSequence& s, const ElementSet& a);
bool is_subsequence(const GSequence& sub, const GSequence& super);

//literal grammar: comma-separated element indices with optional ^k
//repetition, e.g. "0^8,3,3,4,4"; an empty string is the empty sequence
GSequence parse_sequence(const std::string& text, int universe);
//canonical rendering: ascending indices, ^k for multiplicities above 1
std::string render_sequence(const GSequence& s);

}  // namespace zerosum
