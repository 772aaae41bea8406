#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zerosum/group.hpp"
#include "zerosum/products.hpp"
#include "zerosum/reports.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum {

struct SearchBudget {
    uint64_t enumeration_cap = 10'000'000;   //multisets per scanned level
    ProductBudget products;                  //per-call and memo caps
    int jobs = 1;                            //0 = all hardware threads
    uint32_t beam_width = 4096;              //witness finder beam
    uint32_t beam_restarts = 32;
    uint64_t witness_time_ms = 30'000;       //witness finder budget, 0 = unlimited
    uint32_t exact_length_cap = 12;          //exact-pi verifier sequence cap
};

//a sequence is "bad" for target length k when no sub-multiset with exactly
//k terms multiplies to the identity; shorter sequences are vacuously bad.
//E(G) is the least t with no bad multiset of size t for k = |G|, s(G) the
//same for k = exp(G), and d(G) the longest product-one-free length.

//frontier search over canonical product-one-free multisets
InvariantReport davenport_small(const FiniteGroup& g, const SearchBudget& budget);

//upward scan from |G| + d(G); method "" picks per group structure, or force
//"exhaustive" / "exhaustive-with-frontier"
InvariantReport egz_invariant(const FiniteGroup& g, const SearchBudget& budget,
                              const std::string& method = "");

InvariantReport s_invariant(const FiniteGroup& g, const SearchBudget& budget,
                            const std::string& method = "");

//identity^(|G|-1) followed by a davenport certificate: a bad sequence of
//length |G| + d(G) - 1 witnessing E(G) >= |G| + d(G)
GSequence lower_bound_seq_E(const FiniteGroup& g, const SearchBudget& budget);

//abelian groups must satisfy E = |G| + d exactly; all groups E >= |G| + d
VerificationReport gao_relation_check(const FiniteGroup& g, const SearchBudget& budget);

//layered beam search over (used-count, prefix-product) states; returns an
//ordered element selection of exactly target_len terms multiplying to the
//identity, or nullopt when the budget runs out
std::optional<std::vector<int>> find_product_one_witness(const FiniteGroup& g,
                                                         const GSequence& s,
                                                         uint64_t target_len,
                                                         const SearchBudget& budget,
                                                         uint64_t seed);

//true when no k-term sub-multiset multiplies to the identity; engine may be
//null for abelian groups (counts DP is used instead)
bool is_bad_for_target(const FiniteGroup& g, const GSequence& s, uint64_t k,
                       ProductEngine* engine);

//re-check an emitted certificate from scratch
bool revalidate_invariant_certificate(const FiniteGroup& g, const std::string& which,
                                      uint64_t value, const GSequence& cert,
                                      const SearchBudget& budget);

}  // namespace zerosum
