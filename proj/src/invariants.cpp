#include "zerosum/invariants.hpp"

#include <algorithm>
#include <unordered_set>

#include "zerosum/enumerate.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/scan.hpp"
#include "zerosum/util.hpp"

namespace zerosum {

namespace {

constexpr const char* kMethodExhaustive = "exhaustive";
constexpr const char* kMethodFrontier = "exhaustive-with-frontier";

GSequence identity_run(const FiniteGroup& g, uint64_t len) {
    GSequence s(g.order());
    if (len) s.add(g.identity(), uint32_t(len));
    return s;
}

//product-one-free frontier node; storing the union of all sub-multiset
//products makes the child test a single bit lookup: S+g stays free iff
//g != 1 and inv(g) is not a product of any nonempty sub-multiset of S
struct FreeNode {
    GSequence seq;
    ElementSet products;
};

struct FrontierOutcome {
    uint64_t last_level = 0;       //index of the last nonempty level
    GSequence first_of_last;       //canonically first member there
    std::vector<uint64_t> sizes;   //per-level frontier sizes
    uint64_t children_examined = 0;
    bool empty_from_start = false;
};

//bad multisets of size `level` restricted to new sub-multisets only: every
//k-term sub-multiset of parent was already confirmed identity-free, so a
//child only needs the sub-multisets using all copies of the appended g
bool child_stays_bad(ProductEngine& engine, const GSequence& child, int g, uint64_t k) {
    const FiniteGroup& grp = engine.group();
    uint64_t cg = child.counts[g];
    if (cg > k) return true;
    GSequence rest = child;
    rest.remove(g, uint32_t(cg));
    bool bad = true;
    int one = grp.identity();
    sub_multisets(rest, k - cg, [&](const GSequence& t) {
        GSequence full = t;
        full.add(g, uint32_t(cg));
        if (engine.pi(full).contains(one)) {
            bad = false;
            return false;
        }
        return true;
    });
    return bad;
}

}  // namespace

bool is_bad_for_target(const FiniteGroup& g, const GSequence& s, uint64_t k,
                       ProductEngine* engine) {
    if (s.length < k) return true;
    if (engine) return !engine->pi_n_contains(s, k, g.identity());
    if (!g.is_abelian())
        throw UsageError("counts DP badness requires an abelian group");
    return !abelian_pi_n_contains(g, s, k, g.identity());
}

InvariantReport davenport_small(const FiniteGroup& g, const SearchBudget& budget) {
    Stopwatch watch;
    ProductEngine engine(g, budget.products);
    InvariantReport rep;
    rep.which = "d";
    rep.group = g.descriptor();
    rep.method = kMethodFrontier;

    std::vector<FreeNode> level;
    {
        FreeNode root;
        root.seq = GSequence(g.order());
        root.products = ElementSet(g.order());
        level.push_back(std::move(root));
    }
    std::vector<uint64_t> sizes{1};
    uint64_t children = 0;
    uint64_t d = 0;
    GSequence cert = GSequence(g.order());
    while (true) {
        std::vector<FreeNode> next;
        for (const FreeNode& node : level) {
            extend_canonical(node.seq, [&](int e) {
                ++children;
                if (e == g.identity()) return;
                if (node.products.contains(g.inv(e))) return;
                FreeNode child;
                child.seq = node.seq;
                child.seq.add(e);
                child.products = engine.pi_all(child.seq);
                next.push_back(std::move(child));
            });
        }
        if (next.size() > budget.enumeration_cap)
            throw ResourceError("product-one-free frontier exceeds enumeration cap", d + 1, 0);
        if (next.empty()) break;
        ++d;
        cert = next.front().seq;
        sizes.push_back(next.size());
        level = std::move(next);
    }
    rep.value = d;
    rep.certificate = cert;
    rep.counters["children_examined"] = children;
    rep.counters["frontier_sizes"] = sizes;
    rep.counters["memo_entries"] = engine.memo_entries();
    rep.elapsed_ms = watch.ms();
    return rep;
}

GSequence lower_bound_seq_E(const FiniteGroup& g, const SearchBudget& budget) {
    InvariantReport d = davenport_small(g, budget);
    GSequence out = identity_run(g, uint64_t(g.order()) - 1);
    return concat(out, d.certificate);
}

namespace {

//maximal bad sequence by greedy extension in element order
GSequence greedy_bad_probe(const FiniteGroup& g, uint64_t target, ProductEngine* engine) {
    GSequence s(g.order());
    bool grew = true;
    while (grew) {
        grew = false;
        for (int e = 0; e < g.order() && !grew; ++e) {
            GSequence ext = s;
            ext.add(e);
            if (is_bad_for_target(g, ext, target, engine)) {
                s = std::move(ext);
                grew = true;
            }
        }
    }
    return s;
}

FrontierOutcome bad_frontier_search(const FiniteGroup& g, uint64_t target,
                                    const SearchBudget& budget, ProductEngine& engine,
                                    uint64_t& scanned) {
    int n = g.order();
    int one = g.identity();
    FrontierOutcome out;
    check_enumeration_budget(n, target, budget.enumeration_cap);
    std::vector<GSequence> level;
    enumerate_multisets(n, target, [&](const GSequence& s) {
        if (!engine.pi(s).contains(one)) level.push_back(s);
        return true;
    });
    scanned += multiset_count(n, target);
    if (level.empty()) {
        out.empty_from_start = true;
        out.last_level = target;
        return out;
    }
    out.sizes.push_back(level.size());
    uint64_t t = target;
    while (true) {
        std::vector<GSequence> next;
        uint64_t examined = 0;
        for (const GSequence& node : level) {
            extend_canonical(node, [&](int e) {
                ++examined;
                GSequence child = node;
                child.add(e);
                if (child_stays_bad(engine, child, e, target)) next.push_back(std::move(child));
            });
        }
        out.children_examined += examined;
        scanned += examined;
        if (next.size() > budget.enumeration_cap)
            throw ResourceError("bad-sequence frontier exceeds enumeration cap", t + 2, 0);
        if (next.empty()) {
            out.last_level = t;
            out.first_of_last = level.front();
            return out;
        }
        out.sizes.push_back(next.size());
        level = std::move(next);
        ++t;
    }
}

InvariantReport scan_invariant(const FiniteGroup& g, const SearchBudget& budget,
                               uint64_t target, const std::string& which,
                               const std::string& method) {
    Stopwatch watch;
    int n = g.order();
    InvariantReport rep;
    rep.which = which;
    rep.group = g.descriptor();

    std::string m = method;
    if (m.empty()) m = g.is_abelian() ? kMethodExhaustive : kMethodFrontier;
    if (m != kMethodExhaustive && m != kMethodFrontier)
        throw UsageError("unknown method '" + method + "'");
    rep.method = m;

    uint64_t scanned = 0;
    if (m == kMethodFrontier) {
        ProductEngine engine(g, budget.products);
        FrontierOutcome out = bad_frontier_search(g, target, budget, engine, scanned);
        if (out.empty_from_start) {
            rep.value = target;
            rep.certificate = identity_run(g, target - 1);
        } else {
            rep.value = out.last_level + 1;
            rep.certificate = out.first_of_last;
        }
        rep.counters["start_level"] = target;
        rep.counters["multisets_scanned"] = scanned;
        rep.counters["bad_level_sizes"] = out.sizes;
        rep.counters["children_examined"] = out.children_examined;
        rep.counters["memo_entries"] = engine.memo_entries();
        rep.elapsed_ms = watch.ms();
        return rep;
    }

    //exhaustive upward scan; the start bracket comes from a constructed bad
    //sequence so every earlier level is bad by restriction
    bool abelian = g.is_abelian();
    ProductEngine engine(g, budget.products);
    ProductEngine* ep = abelian ? nullptr : &engine;
    GSequence start_cert =
        which == "E" ? lower_bound_seq_E(g, budget) : greedy_bad_probe(g, target, ep);
    uint64_t t = start_cert.length + 1;
    uint64_t t0 = t;
    GSequence last_bad = start_cert;
    uint64_t final_level = 0;
    while (true) {
        check_enumeration_budget(n, t, budget.enumeration_cap);
        int jobs = abelian ? budget.jobs : 1;
        auto pred = [&](const GSequence& s) { return is_bad_for_target(g, s, target, ep); };
        LevelScanResult res = scan_level(n, t, jobs, pred);
        scanned += res.scanned;
        if (!res.witness) {
            rep.value = t;
            rep.certificate = last_bad;
            final_level = res.scanned;
            break;
        }
        last_bad = *res.witness;
        ++t;
    }
    rep.counters["start_level"] = t0;
    rep.counters["multisets_scanned"] = scanned;
    rep.counters["final_level_scanned"] = final_level;
    if (!abelian) rep.counters["memo_entries"] = engine.memo_entries();
    rep.elapsed_ms = watch.ms();
    return rep;
}

}  // namespace

InvariantReport egz_invariant(const FiniteGroup& g, const SearchBudget& budget,
                              const std::string& method) {
    return scan_invariant(g, budget, uint64_t(g.order()), "E", method);
}

InvariantReport s_invariant(const FiniteGroup& g, const SearchBudget& budget,
                            const std::string& method) {
    return scan_invariant(g, budget, uint64_t(g.exponent()), "s", method);
}

VerificationReport gao_relation_check(const FiniteGroup& g, const SearchBudget& budget) {
    Stopwatch watch;
    VerificationReport rep;
    rep.check = "gao-relation";
    rep.group = g.descriptor();
    InvariantReport e = egz_invariant(g, budget);
    InvariantReport d = davenport_small(g, budget);
    uint64_t bound = uint64_t(g.order()) + d.value;
    bool equal = e.value == bound;
    bool ok = g.is_abelian() ? equal : e.value >= bound;
    rep.verdict = ok ? "pass" : "fail";
    rep.counters["E"] = e.value;
    rep.counters["d"] = d.value;
    rep.counters["order"] = uint64_t(g.order());
    rep.counters["equality"] = equal;
    if (!ok) {
        rep.counterexample = ordered_json::object();
        rep.counterexample["group"] = g.descriptor();
        rep.counterexample["E"] = e.value;
        rep.counterexample["d"] = d.value;
    }
    rep.elapsed_ms = watch.ms();
    return rep;
}

std::optional<std::vector<int>> find_product_one_witness(const FiniteGroup& g,
                                                         const GSequence& s,
                                                         uint64_t target_len,
                                                         const SearchBudget& budget,
                                                         uint64_t seed) {
    if (target_len < 1 || target_len > s.length)
        throw UsageError("witness length must be in [1, |S|]");
    Stopwatch watch;
    std::vector<int> support = s.support();
    int m = int(support.size());
    int one = g.identity();

    struct State {
        std::vector<uint8_t> rem;
        uint8_t prod = 0;
        uint32_t parent = 0;
        uint8_t via = 0;  //support position used to reach this state
    };
    auto state_key = [](const State& st) {
        uint64_t h = st.prod;
        for (uint8_t c : st.rem) h = hash_combine(h, c);
        return h;
    };

    for (uint32_t restart = 0; restart < std::max<uint32_t>(1, budget.beam_restarts); ++restart) {
        if (budget.witness_time_ms && watch.ms() > budget.witness_time_ms) return std::nullopt;
        Rng rng(hash_combine(seed, restart));
        std::vector<int> order(m);
        for (int i = 0; i < m; ++i) order[i] = i;
        for (int i = m - 1; i > 0; --i) std::swap(order[i], order[rng.below(uint64_t(i) + 1)]);

        std::vector<std::vector<State>> layers(1);
        {
            State root;
            root.rem.resize(m);
            for (int i = 0; i < m; ++i) root.rem[i] = uint8_t(std::min<uint32_t>(s.counts[support[i]], 255));
            root.prod = uint8_t(one);
            layers[0].push_back(std::move(root));
        }
        for (uint64_t layer = 1; layer <= target_len; ++layer) {
            if (budget.witness_time_ms && watch.ms() > budget.witness_time_ms) return std::nullopt;
            std::vector<State> cand;
            std::unordered_set<uint64_t> seen;
            bool final_layer = layer == target_len;
            int hit = -1;
            for (uint32_t si = 0; si < layers[layer - 1].size() && hit < 0; ++si) {
                const State& st = layers[layer - 1][si];
                for (int oi = 0; oi < m && hit < 0; ++oi) {
                    int i = order[oi];
                    if (!st.rem[i]) continue;
                    State nx;
                    nx.rem = st.rem;
                    nx.rem[i]--;
                    nx.prod = uint8_t(g.mul(st.prod, support[i]));
                    nx.parent = si;
                    nx.via = uint8_t(i);
                    if (final_layer && nx.prod != one) continue;
                    if (!seen.insert(state_key(nx)).second) continue;
                    cand.push_back(std::move(nx));
                    if (final_layer) hit = int(cand.size()) - 1;
                }
            }
            if (final_layer) {
                if (hit < 0) break;
                //walk parents to recover the ordered selection
                layers.push_back(std::move(cand));
                std::vector<int> pick;
                uint32_t idx = uint32_t(hit);
                for (uint64_t l = target_len; l >= 1; --l) {
                    const State& st = layers[l][idx];
                    pick.push_back(support[st.via]);
                    idx = st.parent;
                }
                std::reverse(pick.begin(), pick.end());
                int acc = one;
                for (int e : pick) acc = g.mul(acc, e);
                if (acc != one) throw std::logic_error("witness reconstruction failed");
                return pick;
            }
            if (cand.empty()) break;
            if (cand.size() > budget.beam_width) {
                //seeded partial shuffle keeps a uniform deterministic subset
                for (uint32_t i = 0; i < budget.beam_width; ++i) {
                    uint64_t j = i + rng.below(cand.size() - i);
                    std::swap(cand[i], cand[j]);
                }
                cand.resize(budget.beam_width);
            }
            layers.push_back(std::move(cand));
        }
    }
    return std::nullopt;
}

bool revalidate_invariant_certificate(const FiniteGroup& g, const std::string& which,
                                      uint64_t value, const GSequence& cert,
                                      const SearchBudget& budget) {
    ProductEngine engine(g, budget.products);
    if (which == "d") {
        if (cert.length != value) return false;
        if (value == 0) return cert.empty();
        return engine.classify(cert).product_one_free;
    }
    uint64_t target = which == "E" ? uint64_t(g.order()) : uint64_t(g.exponent());
    if (which != "E" && which != "s") return false;
    if (cert.length + 1 != value) return false;
    if (cert.empty()) return value == 1;
    return is_bad_for_target(g, cert, target, &engine);
}

}  // namespace zerosum
