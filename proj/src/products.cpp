#include "zerosum/products.hpp"

#include "zerosum/enumerate.hpp"
#include "zerosum/errors.hpp"

namespace zerosum {

ProductEngine::ProductEngine(const FiniteGroup& g, ProductBudget budget)
    : g_(g), budget_(budget) {}

void ProductEngine::check_call_budget(const GSequence& s) const {
    if (s.empty()) throw UsageError("products of the empty sequence are undefined");
    if (int(s.counts.size()) != g_.order()) throw UsageError("sequence universe mismatch");
    uint64_t subs = sub_multiset_count(s);
    if (subs > budget_.max_submultisets_per_call)
        throw ResourceError("sequence has " + std::to_string(subs) +
                            " sub-multisets, over the per-call cap " +
                            std::to_string(budget_.max_submultisets_per_call));
}

const ElementSet& ProductEngine::pi_cached(const GSequence& s) {
    auto it = memo_.find(s.memo_key());
    if (it != memo_.end()) return it->second;
    GSequence scratch = s;
    return pi_compute(scratch);
}

const ElementSet& ProductEngine::pi_compute(GSequence& m) {
    std::string key = m.memo_key();
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    ElementSet out(g_.order());
    if (m.length == 1) {
        out.add(m.max_support());
    } else {
        //pi(M) = union over g in support of g * pi(M - g)
        for (int e = 0; e < m.universe(); ++e) {
            if (!m.counts[e]) continue;
            m.remove(e);
            const ElementSet& rest = pi_compute(m);
            m.add(e);
            out |= g_.left_translate(e, rest);
        }
    }
    if (memo_.size() >= budget_.max_memo_entries)
        throw ResourceError("product memo cap " + std::to_string(budget_.max_memo_entries) +
                            " reached");
    return memo_.emplace(std::move(key), out).first->second;
}

ElementSet ProductEngine::pi(const GSequence& s) {
    check_call_budget(s);
    return pi_cached(s);
}

ElementSet ProductEngine::pi_n(const GSequence& s, uint64_t k) {
    check_call_budget(s);
    if (k < 1 || k > s.length)
        throw UsageError("pi_n needs 1 <= k <= |S|, got k=" + std::to_string(k) +
                         " with |S|=" + std::to_string(s.length));
    ElementSet out(g_.order());
    sub_multisets(s, k, [&](const GSequence& t) {
        out |= pi_cached(t);
        return true;
    });
    return out;
}

ElementSet ProductEngine::pi_all(const GSequence& s) {
    check_call_budget(s);
    //computing pi(S) fills the memo for every nonempty sub-multiset
    ElementSet out = pi_cached(s);
    for (uint64_t k = 1; k < s.length; ++k)
        sub_multisets(s, k, [&](const GSequence& t) {
            out |= pi_cached(t);
            return true;
        });
    return out;
}

bool ProductEngine::pi_n_contains(const GSequence& s, uint64_t k, int target) {
    check_call_budget(s);
    if (k < 1 || k > s.length) return false;
    bool found = false;
    sub_multisets(s, k, [&](const GSequence& t) {
        if (pi_cached(t).contains(target)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

ProductEngine::Classification ProductEngine::classify(const GSequence& s) {
    check_call_budget(s);
    Classification c;
    int one = g_.identity();
    c.product_one = pi_cached(s).contains(one);
    bool proper_hit = false;
    for (uint64_t k = 1; k < s.length && !proper_hit; ++k)
        sub_multisets(s, k, [&](const GSequence& t) {
            if (pi_cached(t).contains(one)) {
                proper_hit = true;
                return false;
            }
            return true;
        });
    c.product_one_free = !c.product_one && !proper_hit;
    c.minimal_product_one = c.product_one && !proper_hit;
    return c;
}

ElementSet kfold_setproduct(const FiniteGroup& g, const std::vector<ElementSet>& sets,
                            uint64_t k) {
    if (!g.is_abelian())
        throw UsageError("k-fold setproducts are defined here for abelian groups only");
    if (sets.empty()) throw UsageError("setproduct needs at least one set");
    if (k < 1 || k > sets.size())
        throw UsageError("setproduct needs 1 <= k <= " + std::to_string(sets.size()) +
                         ", got k=" + std::to_string(k));
    for (const auto& a : sets)
        if (a.empty()) throw UsageError("setproduct sets must be nonempty");
    //dp[j] = products of j elements drawn from a strictly increasing prefix
    std::vector<ElementSet> dp(k + 1, ElementSet(g.order()));
    dp[0].add(g.identity());
    for (const auto& a : sets)
        for (uint64_t j = std::min<uint64_t>(k, sets.size()); j >= 1; --j) {
            if (dp[j - 1].empty()) continue;
            ElementSet next(g.order());
            a.for_each([&](int x) {
                dp[j - 1].for_each([&](int p) { next.add(g.mul(p, x)); });
            });
            dp[j] |= next;
        }
    return dp[k];
}

bool abelian_pi_n_contains(const FiniteGroup& g, const GSequence& s, uint64_t k, int target) {
    if (!g.is_abelian())
        throw UsageError("the reachability dp is sound for abelian groups only");
    if (k < 1 || k > s.length) return false;
    std::vector<ElementSet> rows(k + 1, ElementSet(g.order()));
    rows[0].add(g.identity());
    for (int e = 0; e < s.universe(); ++e) {
        for (uint32_t rep = 0; rep < s.counts[e]; ++rep) {
            for (uint64_t j = k; j >= 1; --j) {
                if (rows[j - 1].empty()) continue;
                rows[j] |= g.left_translate(e, rows[j - 1]);
            }
            if (rows[k].contains(target)) return true;
        }
    }
    return rows[k].contains(target);
}

}  // namespace zerosum
