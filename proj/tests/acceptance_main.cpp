//acceptance gate: one line per criterion, exit code = number of failures.
//each criterion re-runs the documented command path with its runtime cap.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "zerosum/enumerate.hpp"
#include "zerosum/invariants.hpp"
#include "zerosum/util.hpp"
#include "zerosum/verifiers.hpp"

using namespace zerosum;
using nlohmann::ordered_json;

namespace {

struct Criterion {
    std::string name;
    double cap_seconds;
    std::function<bool(std::string&)> run;
};

SearchBudget roomy(int jobs = 1) {
    SearchBudget b;
    b.enumeration_cap = 100'000'000;
    b.products.max_submultisets_per_call = 100'000'000;
    b.products.max_memo_entries = 100'000'000;
    b.jobs = jobs;
    return b;
}

bool fail(std::string& why, const std::string& message) {
    why = message;
    return false;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult res;
    const char* bin = std::getenv("ZEROSUM_BIN");
    if (!bin) return res;
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

//criterion 1: full-length values for cyclic groups, n in [2,7]
bool c1_egz(std::string& why) {
    VerificationReport rep = verify_egz_range(7, roomy());
    if (rep.verdict != "pass") return fail(why, "verdict " + rep.verdict);
    for (const auto& pair : rep.counters["values"]) {
        uint64_t n = pair[0].get<uint64_t>(), e = pair[1].get<uint64_t>();
        if (e != 2 * n - 1) return fail(why, "E(c" + std::to_string(n) + ") off");
    }
    return true;
}

//criterion 2: exact value 13 for c3xc3 with the documented scan size,
//single-threaded, certificate of length 12 that revalidates
bool c2_c3xc3(std::string& why) {
    FiniteGroup g = build_group("c3xc3");
    InvariantReport rep = egz_invariant(g, roomy(1));
    if (rep.value != 13) return fail(why, "value " + std::to_string(rep.value));
    if (rep.certificate.length != 12)
        return fail(why, "certificate length " + std::to_string(rep.certificate.length));
    if (!revalidate_invariant_certificate(g, "E", rep.value, rep.certificate, roomy()))
        return fail(why, "certificate does not revalidate");
    uint64_t scanned = rep.counters["multisets_scanned"].get<uint64_t>();
    if (scanned != 203490) return fail(why, "scanned " + std::to_string(scanned));
    return true;
}

//criterion 3: three-halves values on d6, d10, q8
bool c3_nonabelian(std::string& why) {
    std::map<std::string, uint64_t> expect{{"d6", 9}, {"d10", 15}, {"q8", 12}};
    for (const auto& [desc, want] : expect) {
        InvariantReport rep = egz_invariant(build_group(desc), roomy());
        if (rep.value != want)
            return fail(why, desc + " gave " + std::to_string(rep.value));
    }
    return true;
}

//criterion 4: sum relation with equality on all abelian groups of order
//<= 9 and observed equality on the d6/q8 spot checks
bool c4_gao(std::string& why) {
    VerificationReport rep = verify_gao_catalog(9, roomy());
    if (rep.verdict != "pass") return fail(why, "verdict " + rep.verdict);
    for (const auto& row : rep.counters["rows"])
        if (!row["equality"].get<bool>())
            return fail(why, row["group"].get<std::string>() + " not tight");
    return true;
}

//criterion 5: inverse structure at the five documented (n, k) pairs; the
//(7,2) run must find exactly 21 extremal multisets
bool c5_inverse(std::string& why) {
    const std::pair<uint64_t, uint64_t> cases[] = {{7, 2}, {7, 3}, {8, 2}, {9, 2}, {9, 3}};
    for (auto [n, k] : cases) {
        VerificationReport rep = verify_inverse_structure(n, k, roomy());
        if (rep.verdict != "pass")
            return fail(why, "(" + std::to_string(n) + "," + std::to_string(k) + ") " +
                                 rep.verdict);
        if (n == 7 && k == 2 && rep.counters["bad_sequences"].get<uint64_t>() != 21)
            return fail(why, "(7,2) extremal count off");
    }
    return true;
}

//criterion 6: sumset lower bound, exhaustive small instances plus 1000
//seeded random instances per abelian group of order <= 12
bool c6_kneser(std::string& why) {
    VerificationReport rep = verify_kneser(1000, default_seed("kneser"), 12, roomy());
    if (rep.verdict != "pass") return fail(why, "verdict " + rep.verdict);
    if (rep.counters["exhaustive_instances"].get<uint64_t>() == 0)
        return fail(why, "no exhaustive instances");
    if (rep.counters["random_instances"].get<uint64_t>() != 19000)
        return fail(why, "random instance count off");
    return true;
}

//criterion 7: conjugation-exponentiation basics on meta(3,7,2) and meta(3,7,4)
bool c7_basic(std::string& why) {
    for (int r : {2, 4}) {
        VerificationReport rep = verify_lemma_basic(MetacyclicParams{3, 7, r});
        if (rep.verdict != "pass") return fail(why, "r=" + std::to_string(r));
    }
    return true;
}

//criterion 8: conjugation product containment, 2401-tuple family plus 500
//seeded random trials
bool c8_conj(std::string& why) {
    VerificationReport rep = verify_lemma_conjugation(MetacyclicParams{3, 7, 2}, 500,
                                                      default_seed("lemma-conj"), roomy());
    if (rep.verdict != "pass") return fail(why, "verdict " + rep.verdict);
    if (rep.counters["family_instances"].get<uint64_t>() != 2401)
        return fail(why, "family size off");
    if (rep.counters["random_trials"].get<uint64_t>() != 500)
        return fail(why, "trial count off");
    return true;
}

//criterion 9: sampled witnesses for the main bound on meta(3,7,2), 200
//trials, no misses, no unresolved
bool c9_sample(std::string& why) {
    VerificationReport rep = sample_main_theorem(build_group("meta(3,7,2)"), 200,
                                                 default_seed("sample-main-theorem"), roomy());
    if (rep.verdict != "pass") return fail(why, "verdict " + rep.verdict);
    if (rep.counters["witnesses_found"].get<uint64_t>() != 200)
        return fail(why, "witnesses " + rep.counters["witnesses_found"].dump());
    if (rep.counters["unresolved"].get<uint64_t>() != 0)
        return fail(why, "unresolved trials");
    return true;
}

//criterion 10: memoized engine vs brute-force permutation enumeration;
//exhaustive length <= 4 plus 10^4 random cases of length <= 6, order <= 8
bool c10_oracle(std::string& why) {
    std::vector<FiniteGroup> groups;
    for (const GroupDescriptor& d : group_catalog(8)) groups.push_back(build_group(d));
    uint64_t mismatches = 0;
    auto agree = [&](const FiniteGroup& g, ProductEngine& engine, const GSequence& s) {
        std::set<int> got;
        engine.pi(s).for_each([&](int e) { got.insert(e); });
        if (got != oracle::brute_pi(g, s)) ++mismatches;
        std::set<int> all;
        engine.pi_all(s).for_each([&](int e) { all.insert(e); });
        if (all != oracle::brute_pi_all(g, s)) ++mismatches;
        for (uint64_t k = 1; k <= s.length; ++k) {
            std::set<int> kth;
            engine.pi_n(s, k).for_each([&](int e) { kth.insert(e); });
            if (kth != oracle::brute_pi_n(g, s, k)) ++mismatches;
        }
    };
    for (const FiniteGroup& g : groups) {
        ProductEngine engine(g);
        for (uint64_t len = 1; len <= 4; ++len)
            enumerate_multisets(g.order(), len, [&](const GSequence& s) {
                agree(g, engine, s);
                return true;
            });
    }
    Rng rng(default_seed("acceptance-oracle"));
    for (int trial = 0; trial < 10'000; ++trial) {
        const FiniteGroup& g = groups[rng.below(groups.size())];
        ProductEngine engine(g);
        GSequence s(g.order());
        uint64_t len = 1 + rng.below(6);
        for (uint64_t i = 0; i < len; ++i) s.add(int(rng.below(uint64_t(g.order()))));
        agree(g, engine, s);
    }
    if (mismatches) return fail(why, std::to_string(mismatches) + " mismatches");
    return true;
}

//criterion 11: byte-identical json from --jobs 1 and --jobs 4 for a
//computation, a seeded verification, and a seeded sampling run
bool c11_determinism(std::string& why) {
    if (!std::getenv("ZEROSUM_BIN")) return fail(why, "ZEROSUM_BIN not set");
    const std::string cases[] = {
        "invariant c2xc4 --which E --format json",
        "verify kneser --trials 100 --max-order 8 --seed 11 --format json",
        "sample main-theorem --group 'meta(3,7,2)' --trials 3 --seed 5 --format json",
    };
    for (const std::string& args : cases) {
        RunResult one = run_cli(args + " --jobs 1");
        RunResult four = run_cli(args + " --jobs 4");
        if (one.exit_code != 0 || four.exit_code != 0)
            return fail(why, "nonzero exit for: " + args);
        ordered_json a = ordered_json::parse(one.out, nullptr, false);
        ordered_json b = ordered_json::parse(four.out, nullptr, false);
        if (a.is_discarded() || b.is_discarded()) return fail(why, "unparsable output");
        a["elapsed_ms"] = 0;
        b["elapsed_ms"] = 0;
        if (a.dump() != b.dump()) return fail(why, "outputs differ for: " + args);
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"cyclic full-length values n=2..7", 60, c1_egz},
        {"c3xc3 value 13 via 203490-multiset scan", 120, c2_c3xc3},
        {"d6/d10/q8 values 9/15/12", 600, c3_nonabelian},
        {"sum relation tight on abelian catalog <= 9 and d6/q8", 600, c4_gao},
        {"inverse structure at five (n,k) pairs, 21 extremals at (7,2)", 300, c5_inverse},
        {"sumset bound, exhaustive + 1000 random per group <= 12", 120, c6_kneser},
        {"conjugation basics on meta(3,7,2) and meta(3,7,4)", 60, c7_basic},
        {"conjugation containment, 2401 family + 500 trials", 300, c8_conj},
        {"sampled main-bound witnesses, 200/200 on meta(3,7,2)", 900, c9_sample},
        {"engine vs brute force, exhaustive <= 4 + 10^4 random", 300, c10_oracle},
        {"byte-identical json across --jobs 1 and 4", 300, c11_determinism},
    };
    int failures = 0;
    double total = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        std::string why;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        total += secs;
        if (ok && secs > c.cap_seconds) {
            ok = false;
            why = "over the " + std::to_string(int(c.cap_seconds)) + "s budget";
        }
        if (!ok) ++failures;
        std::printf("[%2zu/11] %s  %7.1fs  %s%s%s\n", i + 1, ok ? "PASS" : "FAIL", secs,
                    c.name.c_str(), why.empty() ? "" : " :: ", why.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %zu/11 passed in %.1fs\n", criteria.size() - size_t(failures),
                total);
    return failures;
}
