#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "zerosum/enumerate.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/products.hpp"
#include "zerosum/util.hpp"

using namespace zerosum;

namespace {

std::set<int> to_std(const ElementSet& s) {
    std::set<int> out;
    s.for_each([&](int e) { out.insert(e); });
    return out;
}

std::vector<FiniteGroup> small_catalog() {
    std::vector<FiniteGroup> out;
    for (const GroupDescriptor& d : group_catalog(8)) out.push_back(build_group(d));
    return out;
}

}  // namespace

TEST_CASE("engine matches brute force on all short sequences") {
    for (const FiniteGroup& g : small_catalog()) {
        ProductEngine engine(g);
        for (uint64_t len = 1; len <= 4; ++len)
            enumerate_multisets(g.order(), len, [&](const GSequence& s) {
                CHECK(to_std(engine.pi(s)) == oracle::brute_pi(g, s));
                CHECK(to_std(engine.pi_all(s)) == oracle::brute_pi_all(g, s));
                for (uint64_t k = 1; k <= len; ++k)
                    CHECK(to_std(engine.pi_n(s, k)) == oracle::brute_pi_n(g, s, k));
                return true;
            });
    }
}

TEST_CASE("engine matches brute force on random longer sequences") {
    std::vector<FiniteGroup> groups = small_catalog();
    Rng rng(default_seed("products-oracle"));
    for (int trial = 0; trial < 2000; ++trial) {
        const FiniteGroup& g = groups[rng.below(groups.size())];
        uint64_t len = 1 + rng.below(6);
        GSequence s(g.order());
        for (uint64_t i = 0; i < len; ++i) s.add(int(rng.below(uint64_t(g.order()))));
        ProductEngine engine(g);
        uint64_t k = 1 + rng.below(len);
        CHECK(to_std(engine.pi(s)) == oracle::brute_pi(g, s));
        CHECK(to_std(engine.pi_n(s, k)) == oracle::brute_pi_n(g, s, k));
    }
}

TEST_CASE("classification flags") {
    FiniteGroup g = build_group("d6");
    ProductEngine engine(g);
    //product of a reflection with itself is the identity
    GSequence two(g.order());
    two.add(3, 2);
    auto c = engine.classify(two);
    CHECK(c.product_one);
    CHECK(c.minimal_product_one);
    CHECK_FALSE(c.product_one_free);
    //a single rotation generates nothing trivial
    GSequence one(g.order());
    one.add(1);
    auto c1 = engine.classify(one);
    CHECK_FALSE(c1.product_one);
    CHECK(c1.product_one_free);
    //product-one but not minimal: identity plus a product-one pair
    GSequence three = two;
    three.add(0);
    auto c3 = engine.classify(three);
    CHECK(c3.product_one);
    CHECK_FALSE(c3.minimal_product_one);
    CHECK_FALSE(c3.product_one_free);
}

TEST_CASE("noncommutative product sets really differ from fixed order") {
    //sigma rho vs rho sigma in d6: pi has both, neither is the identity
    FiniteGroup g = build_group("d6");
    ProductEngine engine(g);
    GSequence s(g.order());
    s.add(3);
    s.add(1);
    ElementSet p = engine.pi(s);
    CHECK(p.size() == 2);
    CHECK(p.contains(g.mul(3, 1)));
    CHECK(p.contains(g.mul(1, 3)));
    CHECK_FALSE(p.contains(g.identity()));
}

TEST_CASE("abelian counts dp agrees with the engine") {
    Rng rng(default_seed("abelian-dp"));
    for (const char* desc : {"c5", "c2xc4", "c3xc3", "c12"}) {
        FiniteGroup g = build_group(desc);
        for (int trial = 0; trial < 300; ++trial) {
            uint64_t len = 1 + rng.below(8);
            GSequence s(g.order());
            for (uint64_t i = 0; i < len; ++i) s.add(int(rng.below(uint64_t(g.order()))));
            uint64_t k = 1 + rng.below(len);
            int target = int(rng.below(uint64_t(g.order())));
            ProductEngine engine(g);
            CHECK(abelian_pi_n_contains(g, s, k, target) == engine.pi_n_contains(s, k, target));
        }
    }
}

TEST_CASE("k-fold set products match brute force") {
    Rng rng(default_seed("kfold-oracle"));
    for (const char* desc : {"c4", "c2xc3", "c7"}) {
        FiniteGroup g = build_group(desc);
        int n = g.order();
        for (int trial = 0; trial < 200; ++trial) {
            uint64_t l = 1 + rng.below(4);
            std::vector<ElementSet> sets;
            for (uint64_t i = 0; i < l; ++i) {
                ElementSet a(n);
                int size = 1 + int(rng.below(uint64_t(n)));
                while (a.size() < size) a.add(int(rng.below(uint64_t(n))));
                sets.push_back(a);
            }
            uint64_t k = 1 + rng.below(l);
            //brute: choose k indices increasing, one element from each
            std::set<int> expect;
            std::vector<int> idx(k);
            auto rec = [&](auto&& self, uint64_t pos, uint64_t from) -> void {
                if (pos == k) {
                    std::vector<std::vector<int>> choices;
                    for (uint64_t i = 0; i < k; ++i) choices.push_back(sets[idx[i]].elements());
                    std::vector<size_t> pick(k, 0);
                    while (true) {
                        int acc = g.identity();
                        for (uint64_t i = 0; i < k; ++i) acc = g.mul(acc, choices[i][pick[i]]);
                        expect.insert(acc);
                        size_t p = 0;
                        while (p < k && ++pick[p] == choices[p].size()) pick[p++] = 0;
                        if (p == k) break;
                    }
                    return;
                }
                for (uint64_t i = from; i + (k - pos) <= l; ++i) {
                    idx[pos] = int(i);
                    self(self, pos + 1, i + 1);
                }
            };
            rec(rec, 0, 0);
            CHECK(to_std(kfold_setproduct(g, sets, k)) == expect);
        }
    }
}

TEST_CASE("engine rejects misuse and respects caps") {
    FiniteGroup g = build_group("c4");
    ProductEngine engine(g);
    GSequence empty(g.order());
    CHECK_THROWS_AS(engine.pi(empty), UsageError);
    GSequence wrong(3);
    wrong.add(0);
    CHECK_THROWS_AS(engine.pi(wrong), UsageError);
    GSequence s(g.order());
    s.add(1, 3);
    CHECK_THROWS_AS(engine.pi_n(s, 0), UsageError);
    CHECK_THROWS_AS(engine.pi_n(s, 4), UsageError);

    ProductBudget tiny;
    tiny.max_submultisets_per_call = 3;
    ProductEngine capped(g, tiny);
    GSequence big(g.order());
    big.add(0);
    big.add(1);
    big.add(2);
    CHECK_THROWS_AS(capped.pi(big), ResourceError);

    //non-abelian group rejected by the abelian-only paths
    FiniteGroup d6 = build_group("d6");
    GSequence t(d6.order());
    t.add(1, 2);
    CHECK_THROWS_AS(abelian_pi_n_contains(d6, t, 1, 0), UsageError);
    std::vector<ElementSet> sets{ElementSet(d6.order())};
    sets[0].add(1);
    CHECK_THROWS_AS(kfold_setproduct(d6, sets, 1), UsageError);
}

TEST_CASE("memo is shared across queries") {
    FiniteGroup g = build_group("q8");
    ProductEngine engine(g);
    GSequence s(g.order());
    s.add(1, 2);
    s.add(4, 2);
    engine.pi(s);
    uint64_t after_first = engine.memo_entries();
    engine.pi(s);
    CHECK(engine.memo_entries() == after_first);
    //sub-multiset query reuses the same table
    GSequence sub = s;
    sub.remove(1);
    engine.pi(sub);
    CHECK(engine.memo_entries() == after_first);
}
