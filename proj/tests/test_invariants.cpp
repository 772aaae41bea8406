#include <map>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/invariants.hpp"
#include "zerosum/util.hpp"

using namespace zerosum;

namespace {

SearchBudget roomy() {
    SearchBudget b;
    b.enumeration_cap = 50'000'000;
    b.products.max_submultisets_per_call = 50'000'000;
    b.products.max_memo_entries = 50'000'000;
    return b;
}

}  // namespace

TEST_CASE("longest product-one-free length matches brute force on small groups") {
    for (const GroupDescriptor& d : group_catalog(8)) {
        FiniteGroup g = build_group(d);
        InvariantReport rep = davenport_small(g, roomy());
        CHECK(rep.value == oracle::brute_davenport(g, 8));
        CHECK(revalidate_invariant_certificate(g, "d", rep.value, rep.certificate, roomy()));
    }
}

TEST_CASE("known product-one-free maxima") {
    std::map<std::string, uint64_t> expect{
        {"c2", 1}, {"c3", 2}, {"c4", 3}, {"c5", 4}, {"c6", 5},
        {"c2xc2", 2}, {"d6", 3}, {"d8", 4}, {"q8", 4},
    };
    for (const auto& [desc, want] : expect) {
        FiniteGroup g = build_group(desc);
        CHECK(davenport_small(g, roomy()).value == want);
    }
}

TEST_CASE("full-length invariant matches brute force on tiny groups") {
    for (const char* desc : {"c2", "c3", "c4", "c2xc2", "c5", "c6", "c2xc3"}) {
        FiniteGroup g = build_group(desc);
        InvariantReport rep = egz_invariant(g, roomy());
        CHECK(rep.value == oracle::brute_egz(g, 12));
    }
}

TEST_CASE("known full-length invariant values") {
    std::map<std::string, uint64_t> expect{
        {"c2", 3},  {"c3", 5},  {"c4", 7},    {"c5", 9},    {"c2xc2", 6},
        {"c2xc3", 11}, {"d6", 9}, {"d8", 12}, {"q8", 12}, {"c2xc4", 12},
    };
    for (const auto& [desc, want] : expect) {
        FiniteGroup g = build_group(desc);
        InvariantReport rep = egz_invariant(g, roomy());
        CHECK(rep.value == want);
        CHECK(rep.certificate.length + 1 == rep.value);
        CHECK(revalidate_invariant_certificate(g, "E", rep.value, rep.certificate, roomy()));
    }
}

TEST_CASE("both scan methods agree") {
    FiniteGroup g = build_group("d6");
    InvariantReport a = egz_invariant(g, roomy(), "exhaustive");
    InvariantReport b = egz_invariant(g, roomy(), "exhaustive-with-frontier");
    CHECK(a.value == b.value);
    CHECK(a.value == 9);
    CHECK(a.method == "exhaustive");
    CHECK(b.method == "exhaustive-with-frontier");
    //certificates from both methods must revalidate even if they differ
    CHECK(revalidate_invariant_certificate(g, "E", a.value, a.certificate, roomy()));
    CHECK(revalidate_invariant_certificate(g, "E", b.value, b.certificate, roomy()));
}

TEST_CASE("exponent-length invariant") {
    FiniteGroup g = build_group("c3xc3");
    InvariantReport rep = s_invariant(g, roomy());
    CHECK(rep.value == 9);
    CHECK(rep.counters.contains("final_level_scanned"));
    CHECK(rep.counters["final_level_scanned"].get<uint64_t>() == 24310);
    CHECK(revalidate_invariant_certificate(g, "s", rep.value, rep.certificate, roomy()));

    FiniteGroup c4 = build_group("c4");
    CHECK(s_invariant(c4, roomy()).value == 7);
}

TEST_CASE("cyclic lower-bound construction is tight") {
    FiniteGroup g = build_group("c7");
    GSequence low = lower_bound_seq_E(g, roomy());
    CHECK(low.length == 12);  //|G| - 1 identities plus a 6-term free block
    CHECK(is_bad_for_target(g, low, 7, nullptr));
    CHECK(egz_invariant(g, roomy()).value == 13);
}

TEST_CASE("certificate revalidation rejects tampering") {
    FiniteGroup g = build_group("c5");
    InvariantReport rep = egz_invariant(g, roomy());
    CHECK(revalidate_invariant_certificate(g, "E", rep.value, rep.certificate, roomy()));
    //wrong value for the same certificate
    CHECK_FALSE(revalidate_invariant_certificate(g, "E", rep.value + 1, rep.certificate, roomy()));
    //padding with an identity creates a length mismatch
    GSequence padded = rep.certificate;
    padded.add(g.identity());
    CHECK_FALSE(revalidate_invariant_certificate(g, "E", rep.value, padded, roomy()));
    //a sequence with an identity-run of full group order is not bad
    GSequence trivial(g.order());
    trivial.add(g.identity(), 8);
    CHECK_FALSE(revalidate_invariant_certificate(g, "E", 9, trivial, roomy()));

    InvariantReport drep = davenport_small(g, roomy());
    CHECK(revalidate_invariant_certificate(g, "d", drep.value, drep.certificate, roomy()));
    GSequence dtamper = drep.certificate;
    dtamper.add(g.identity());
    CHECK_FALSE(revalidate_invariant_certificate(g, "d", drep.value, dtamper, roomy()));
}

TEST_CASE("sum relation holds on small groups") {
    for (const char* desc : {"c4", "c2xc3", "c3xc3", "d6", "q8"}) {
        FiniteGroup g = build_group(desc);
        VerificationReport rep = gao_relation_check(g, roomy());
        CHECK(rep.verdict == "pass");
        CHECK(rep.group == g.descriptor());
    }
}

TEST_CASE("witness finder agrees with exact membership") {
    Rng rng(default_seed("witness-vs-exact"));
    SearchBudget b = roomy();
    b.beam_width = 4096;
    b.beam_restarts = 16;
    for (const char* desc : {"c5", "c6", "d6"}) {
        FiniteGroup g = build_group(desc);
        ProductEngine engine(g);
        uint64_t target = uint64_t(g.order());
        for (int trial = 0; trial < 40; ++trial) {
            GSequence s(g.order());
            uint64_t len = target + rng.below(3);
            for (uint64_t i = 0; i < len; ++i) s.add(int(rng.below(uint64_t(g.order()))));
            bool exact = engine.pi_n_contains(s, target, g.identity());
            auto witness = find_product_one_witness(g, s, target, b, rng.next());
            if (witness) {
                CHECK(exact);
                CHECK(witness->size() == target);
                int acc = g.identity();
                for (int e : *witness) acc = g.mul(acc, e);
                CHECK(acc == g.identity());
                //the witness must be a sub-multiset of s
                GSequence used(g.order());
                for (int e : *witness) used.add(e);
                CHECK(is_subsequence(used, s));
            } else {
                //the beam covers these tiny spaces; a miss means a genuine miss
                CHECK_FALSE(exact);
            }
        }
    }
}

TEST_CASE("scans stop at the enumeration cap") {
    FiniteGroup g = build_group("c3xc3");
    SearchBudget tiny;
    tiny.enumeration_cap = 50;
    CHECK_THROWS_AS(egz_invariant(g, tiny), ResourceError);
}

TEST_CASE("badness is checked consistently across the dp and the engine") {
    Rng rng(default_seed("badness-cross"));
    FiniteGroup g = build_group("c2xc4");
    ProductEngine engine(g);
    for (int trial = 0; trial < 200; ++trial) {
        GSequence s(g.order());
        uint64_t len = 1 + rng.below(9);
        for (uint64_t i = 0; i < len; ++i) s.add(int(rng.below(uint64_t(g.order()))));
        uint64_t k = 1 + rng.below(len + 2);
        CHECK(is_bad_for_target(g, s, k, nullptr) == is_bad_for_target(g, s, k, &engine));
        CHECK(is_bad_for_target(g, s, k, nullptr) == oracle::brute_bad_for(g, s, k));
    }
}
