#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "zerosum/element_set.hpp"
#include "zerosum/group.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum {

struct ProductBudget {
    //distinct sub-multisets allowed for a single exact call
    uint64_t max_submultisets_per_call = 1'000'000;
    //total memo entries across a scan sharing this engine
    uint64_t max_memo_entries = 8'000'000;
};

//exact product sets over all orderings, memoized on sub-multiset count
//vectors.  pi(M) depends only on M, so one engine may be shared across the
//calls of a whole search; entries are never invalidated.
class ProductEngine {
public:
    explicit ProductEngine(const FiniteGroup& g, ProductBudget budget = {});

    const FiniteGroup& group() const { return g_; }

    //products over all orderings of the full sequence; rejects the empty
    //sequence (products of the empty sequence are undefined here)
    ElementSet pi(const GSequence& s);

    //union of pi over all sub-multisets with exactly k terms, 1 <= k <= |s|
    ElementSet pi_n(const GSequence& s, uint64_t k);

    //union of pi over all nonempty sub-multisets
    ElementSet pi_all(const GSequence& s);

    //membership variant with early exit; used by invariant scans
    bool pi_n_contains(const GSequence& s, uint64_t k, int target);

    struct Classification {
        bool product_one = false;
        bool product_one_free = false;
        bool minimal_product_one = false;
    };
    Classification classify(const GSequence& s);

    uint64_t memo_entries() const { return memo_.size(); }
    void reset_memo() { memo_.clear(); }

private:
    void check_call_budget(const GSequence& s) const;
    const ElementSet& pi_cached(const GSequence& s);
    const ElementSet& pi_compute(GSequence& scratch);

    const FiniteGroup& g_;
    ProductBudget budget_;
    std::unordered_map<std::string, ElementSet> memo_;
};

//k-fold setproduct over strictly increasing indices, abelian groups only
ElementSet kfold_setproduct(const FiniteGroup& g, const std::vector<ElementSet>& sets,
                            uint64_t k);

//counts DP for "some sub-multiset with exactly k terms multiplies to
//target"; valid only for abelian groups, where orderings do not matter.
//O(|s| * k * n) and allocation-light, the fast path for invariant scans.
bool abelian_pi_n_contains(const FiniteGroup& g, const GSequence& s, uint64_t k, int target);

}  // namespace zerosum
