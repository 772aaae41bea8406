#pragma once

#include <cstdint>
#include <vector>

#include "zerosum/descriptor.hpp"
#include "zerosum/element_set.hpp"
#include "zerosum/group.hpp"
#include "zerosum/invariants.hpp"
#include "zerosum/reports.hpp"

namespace zerosum {

//one instance of the generalized Kneser inequality over an abelian group:
//with P = k-fold set product of the A_i and H = stab(P),
//|P| >= |H| * (1 - k + sum over cosets Q of min(k, #{i : A_i meets Q}))
struct KneserInstanceResult {
    uint64_t lhs = 0;
    int64_t rhs = 0;
    uint64_t stabilizer_order = 0;
    bool pass = false;
};
KneserInstanceResult check_kneser_instance(const FiniteGroup& g,
                                           const std::vector<ElementSet>& sets, uint64_t k);

//exhaustive small instances (order <= 5, up to 3 sets of size <= 2) plus
//seeded random instances per abelian catalog group of order <= max_order
VerificationReport verify_kneser(uint64_t trials_per_group, uint64_t seed,
                                 uint64_t max_order, const SearchBudget& budget);

//E(cyclic n) == 2n-1 for every n in [2, n_max]
VerificationReport verify_egz_range(uint64_t n_max, const SearchBudget& budget);

//every sequence of length 2n-k over cyclic(n) with no product-one
//subsequence of length n decomposes as a^[u] b^[v] c_1..c_l with
//ord(a b^-1) = n, u >= v >= n-2k+3, u+v >= 2n-2k+1 (so l <= k-1);
//k=2 forces a^[n-1] b^[n-1]; k=3, n>=4 forces one of two explicit shapes
VerificationReport verify_inverse_structure(uint64_t n, uint64_t k, const SearchBudget& budget);

//subgroup/coset properties of conjugation exponentiation u -> u^(r^s) in
//metacyclic(p,m,r) with p prime, gcd(r-1,m)=1: membership descends (i),
//equal cosets force membership (ii), distinct exponents separate (iii)
VerificationReport verify_lemma_basic(const MetacyclicParams& params);

//product-set containment under conjugation: pi(T0 T1 ... Tt) contains
//{u0}{u1,u1^r,..,u1^(r^(p-1))}..{ut,..} for some u0 in pi(T0), given that
//T0 maps to a product-one sequence mod <y> and holds p terms in one
//nontrivial coset of <x^p, y>, and each uj lies in pi(Tj) inside <y>
VerificationReport verify_lemma_conjugation(const MetacyclicParams& params, uint64_t trials,
                                            uint64_t seed, const SearchBudget& budget,
                                            uint64_t max_total_len = 12);

//E == 3|G|/2 on dihedral groups of order 6..dihedral_max and dicyclic
//groups of order 8..dicyclic_max
VerificationReport verify_prop41(uint64_t dihedral_max, uint64_t dicyclic_max,
                                 const SearchBudget& budget);

//randomized witness search for the bound E(G) <= (3|G|-3)/2 on non-cyclic
//groups of odd order > 9: every sampled sequence of that length should
//yield a product-one subsequence of length |G|; misses that cannot be
//confirmed exactly stay inconclusive, never fail
VerificationReport sample_main_theorem(const FiniteGroup& g, uint64_t trials, uint64_t seed,
                                       const SearchBudget& budget);

//E == |G| + d(G) with equality on every abelian catalog group of order
//<= max_order, and E >= |G| + d(G) on the d6/q8 spot checks
VerificationReport verify_gao_catalog(uint64_t max_order, const SearchBudget& budget);

//exact E <= floor(3|G|/2) over every non-cyclic catalog group of order
//<= max_order; rows record E, d, and the gap E - (|G| + d)
VerificationReport scan_conjecture(uint64_t max_order, const SearchBudget& budget);

}  // namespace zerosum
