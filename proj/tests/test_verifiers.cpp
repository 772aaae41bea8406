#include <string>

#include "doctest.h"
#include "zerosum/errors.hpp"
#include "zerosum/reports.hpp"
#include "zerosum/util.hpp"
#include "zerosum/verifiers.hpp"

using namespace zerosum;

namespace {

SearchBudget roomy() {
    SearchBudget b;
    b.enumeration_cap = 50'000'000;
    b.products.max_submultisets_per_call = 50'000'000;
    b.products.max_memo_entries = 50'000'000;
    return b;
}

MetacyclicParams meta(int s, int m, int r) { return MetacyclicParams{s, m, r}; }

}  // namespace

TEST_CASE("kneser inequality on a hand-worked instance") {
    //cyclic 5, singleton sets {1},{2},{3}, pairs: products {3,4,5=0}
    FiniteGroup g = build_group("c5");
    std::vector<ElementSet> sets;
    for (int e : {1, 2, 3}) {
        ElementSet a(5);
        a.add(e);
        sets.push_back(a);
    }
    KneserInstanceResult r = check_kneser_instance(g, sets, 2);
    CHECK(r.lhs == 3);
    CHECK(r.stabilizer_order == 1);
    //trivial stabilizer: rhs = 1 * (1 - 2 + sum min(2, hits)); hits: each
    //product set element lies in its own coset, three sets hit 3 cosets once
    CHECK(r.rhs == 2);
    CHECK(r.pass);
}

TEST_CASE("kneser inequality is tight for full sets") {
    FiniteGroup g = build_group("c6");
    std::vector<ElementSet> sets;
    ElementSet full(6);
    for (int e = 0; e < 6; ++e) full.add(e);
    sets.push_back(full);
    sets.push_back(full);
    KneserInstanceResult r = check_kneser_instance(g, sets, 2);
    CHECK(r.lhs == 6);
    CHECK(r.stabilizer_order == 6);
    CHECK(r.rhs == 6);
    CHECK(r.pass);
}

TEST_CASE("kneser suite passes") {
    VerificationReport rep = verify_kneser(100, default_seed("kneser"), 8, roomy());
    CHECK(rep.verdict == "pass");
    CHECK(rep.counters["exhaustive_instances"].get<uint64_t>() == 17844);
    CHECK(rep.counters["random_instances"].get<uint64_t>() == 1100);
    CHECK(rep.counterexample.is_null());
}

TEST_CASE("cyclic full-length values across a range") {
    VerificationReport rep = verify_egz_range(5, roomy());
    CHECK(rep.verdict == "pass");
    auto values = rep.counters["values"];
    REQUIRE(values.size() == 4);
    CHECK(values[0][0] == 2);
    CHECK(values[0][1] == 3);
    CHECK(values[3][0] == 5);
    CHECK(values[3][1] == 9);
}

TEST_CASE("inverse structure of long bad sequences over cyclic groups") {
    struct Row {
        uint64_t n, k, bad, pairs;
    };
    for (Row row : {Row{5, 2, 10, 10}, Row{7, 2, 21, 21}, Row{8, 2, 16, 16},
                    Row{7, 3, 84, 21}}) {
        VerificationReport rep = verify_inverse_structure(row.n, row.k, roomy());
        CHECK(rep.verdict == "pass");
        CHECK(rep.counters["bad_sequences"].get<uint64_t>() == row.bad);
        CHECK(rep.counters["distinct_pairs"].get<uint64_t>() == row.pairs);
    }
}

TEST_CASE("inverse structure rejects out-of-range parameters") {
    CHECK_THROWS_AS(verify_inverse_structure(7, 1, roomy()), UsageError);
    //k may not exceed n/4 + 2
    CHECK_THROWS_AS(verify_inverse_structure(7, 4, roomy()), UsageError);
}

TEST_CASE("conjugation exponentiation basics") {
    for (int r : {2, 4}) {
        VerificationReport rep = verify_lemma_basic(meta(3, 7, r));
        CHECK(rep.verdict == "pass");
        CHECK(rep.group == "meta(3,7," + std::to_string(r) + ")");
        CHECK(rep.counters["subgroups"].get<uint64_t>() == 2);
        CHECK(rep.counters["instances"].get<uint64_t>() == 42);
    }
}

TEST_CASE("conjugation basics reject bad hypotheses") {
    //s = 4 is not prime
    CHECK_THROWS_AS(verify_lemma_basic(meta(4, 5, 2)), UsageError);
    //r = 1 is excluded by gcd(r-1, m) = 1 failing for m = 7... r-1 = 0
    CHECK_THROWS_AS(verify_lemma_basic(meta(3, 7, 1)), UsageError);
    //r = 3: 3^3 = 27 = 6 mod 7, not an order-3 action
    CHECK_THROWS_AS(verify_lemma_basic(meta(3, 7, 3)), UsageError);
}

TEST_CASE("conjugation product containment") {
    VerificationReport rep =
        verify_lemma_conjugation(meta(3, 7, 2), 80, default_seed("conj-test"), roomy());
    CHECK(rep.verdict == "pass");
    CHECK(rep.counters["family_instances"].get<uint64_t>() == 2401);
    CHECK(rep.counters["family_run"].get<bool>());
    CHECK(rep.counters["random_trials"].get<uint64_t>() == 80);
}

TEST_CASE("conjugation containment rejects bad hypotheses") {
    //2^2 = 4 != 1 mod 5: not even a valid presentation
    CHECK_THROWS_AS(verify_lemma_conjugation(meta(2, 5, 2), 5, 1, roomy()), UsageError);
    //valid group of order 20, but r^p = 2^2 = 4 != 1 mod 5
    CHECK_THROWS_AS(verify_lemma_conjugation(meta(4, 5, 2), 5, 1, roomy()), UsageError);
}

TEST_CASE("three-halves value on dihedral and dicyclic groups") {
    VerificationReport rep = verify_prop41(8, 8, roomy());
    CHECK(rep.verdict == "pass");
    auto values = rep.counters["values"];
    REQUIRE(values.size() == 3);
    //rows are [group, computed, expected]
    CHECK(values[0] == ordered_json::array({"d6", 9, 9}));
    CHECK(values[1] == ordered_json::array({"d8", 12, 12}));
    CHECK(values[2] == ordered_json::array({"q8", 12, 12}));
}

TEST_CASE("main bound sampling rejects hypothesis violations") {
    SearchBudget b = roomy();
    CHECK_THROWS_AS(sample_main_theorem(build_group("c27"), 1, 1, b), UsageError);
    CHECK_THROWS_AS(sample_main_theorem(build_group("d6"), 1, 1, b), UsageError);
    //order 9 is not > 9
    CHECK_THROWS_AS(sample_main_theorem(build_group("c3xc3"), 1, 1, b), UsageError);
}

TEST_CASE("main bound sampling finds witnesses") {
    SearchBudget b = roomy();
    b.witness_time_ms = 20'000;
    VerificationReport rep =
        sample_main_theorem(build_group("meta(3,7,2)"), 5, default_seed("sample-test"), b);
    CHECK(rep.verdict == "pass");
    CHECK(rep.counters["trials"].get<uint64_t>() == 5);
    CHECK(rep.counters["witnesses_found"].get<uint64_t>() == 5);
    CHECK(rep.counters["unresolved"].get<uint64_t>() == 0);
}

TEST_CASE("sum relation catalog") {
    VerificationReport rep = verify_gao_catalog(6, roomy());
    CHECK(rep.verdict == "pass");
    auto rows = rep.counters["rows"];
    //eight abelian groups of order <= 6 plus the d6/q8 spot checks
    REQUIRE(rows.size() == 10);
    CHECK(rows[0]["group"] == "c1");
    CHECK(rows[0]["E"] == 1);
    bool saw_d6 = false;
    for (const auto& row : rows)
        if (row["group"] == "d6") {
            saw_d6 = true;
            CHECK(row["E"] == 9);
            CHECK(row["d"] == 3);
        }
    CHECK(saw_d6);
}

TEST_CASE("conjecture scan stays within the three-halves bound") {
    VerificationReport rep = scan_conjecture(8, roomy());
    CHECK(rep.verdict == "pass");
    auto rows = rep.counters["rows"];
    REQUIRE(rows.size() == 5);
    for (const auto& row : rows) {
        CHECK(row["within"] == true);
        CHECK(row["gap"] == 0);
    }
    std::string csv = scan_to_csv(rep);
    CHECK(csv.find("group,order,E,d,gap,bound,within") == 0);
    CHECK(csv.find("q8,8,12,4,0,12,yes") != std::string::npos);
}

TEST_CASE("verdicts map to exit codes") {
    CHECK(exit_code_for_verdict("pass") == 0);
    CHECK(exit_code_for_verdict("fail") == 1);
    CHECK(exit_code_for_verdict("inconclusive") == 3);
}
