#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "zerosum/cache.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/group.hpp"
#include "zerosum/invariants.hpp"
#include "zerosum/products.hpp"
#include "zerosum/reports.hpp"
#include "zerosum/sequence.hpp"
#include "zerosum/util.hpp"
#include "zerosum/verifiers.hpp"
#include "zerosum/version.hpp"

namespace {

using namespace zerosum;

struct CommonFlags {
    std::string format = "human";
    int jobs = 1;
    uint64_t budget = 10'000'000;
    uint64_t memo_cap = 8'000'000;
    uint64_t subs_cap = 1'000'000;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--format", f.format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    cmd->add_option("--jobs", f.jobs, "worker threads for parallel scans (0 = all cores)");
    cmd->add_option("--budget", f.budget, "enumeration cap per level");
    cmd->add_option("--memo-cap", f.memo_cap, "product memo entry cap");
    cmd->add_option("--subs-cap", f.subs_cap, "sub-multiset cap per product call");
}

SearchBudget to_budget(const CommonFlags& f) {
    SearchBudget b;
    b.jobs = f.jobs;
    b.enumeration_cap = f.budget;
    b.products.max_memo_entries = f.memo_cap;
    b.products.max_submultisets_per_call = f.subs_cap;
    return b;
}

void emit(const ordered_json& doc, const std::string& format) {
    if (format == "json")
        std::cout << doc.dump(2) << '\n';
    else
        std::cout << human_readable(doc);
}

int emit_verification(const VerificationReport& rep, const CommonFlags& f,
                      ordered_json extra = ordered_json::object()) {
    if (f.format == "csv")
        std::cout << scan_to_csv(rep);
    else
        emit(verification_to_json(rep, std::move(extra)), f.format);
    return exit_code_for_verdict(rep.verdict);
}

int run_group_info(const std::string& desc, const CommonFlags& f) {
    FiniteGroup g = build_group(desc);
    ordered_json doc = ordered_json::object();
    doc["group"] = g.descriptor();
    doc["order"] = g.order();
    doc["exponent"] = g.exponent();
    doc["abelian"] = g.is_abelian();
    doc["cyclic"] = g.is_cyclic();
    doc["identity"] = g.identity();
    doc["element_names"] = g.names();
    doc["version"] = kVersion;
    emit(doc, f.format);
    return 0;
}

int run_invariant(const std::string& desc, const std::string& which, const std::string& method,
                  const std::string& cache_flag, bool no_cache, const CommonFlags& f) {
    if (which != "E" && which != "d" && which != "s")
        throw UsageError("--which must be E, d, or s");
    if (which == "d" && !method.empty() && method != "exhaustive-with-frontier")
        throw UsageError("d supports only the frontier method");
    FiniteGroup g = build_group(desc);
    SearchBudget budget = to_budget(f);

    std::string cache_path = cache_flag;
    if (cache_path.empty() && !no_cache)
        if (const char* env = std::getenv("ZEROSUM_CACHE")) cache_path = env;
    std::optional<ResultCache> cache;
    if (!no_cache && !cache_path.empty()) {
        cache.emplace(cache_path);
        if (std::filesystem::exists(cache_path) && !cache->load())
            std::cerr << "warning: ignoring unreadable or stale cache at " << cache_path << '\n';
    }

    InvariantReport rep;
    bool cached = false;
    if (cache) {
        Stopwatch watch;
        auto hit = cache->lookup(g, which, budget);
        if (hit) {
            rep = std::move(*hit);
            rep.counters = ordered_json::object();
            rep.counters["cached"] = true;
            rep.elapsed_ms = watch.ms();
            cached = true;
        }
    }
    if (!cached) {
        if (which == "E")
            rep = egz_invariant(g, budget, method);
        else if (which == "s")
            rep = s_invariant(g, budget, method);
        else
            rep = davenport_small(g, budget);
        if (cache) {
            cache->put(rep);
            if (!cache->store())
                std::cerr << "warning: could not write cache to " << cache_path << '\n';
        }
    }
    ordered_json params = ordered_json::object();
    params["budget"] = f.budget;
    params["memo_cap"] = f.memo_cap;
    emit(invariant_to_json(rep, std::move(params)), f.format);
    return 0;
}

int run_products(const std::string& desc, const std::string& literal, const std::string& op,
                 uint64_t k, const CommonFlags& f) {
    FiniteGroup g = build_group(desc);
    GSequence s = parse_sequence(literal, g.order());
    SearchBudget budget = to_budget(f);
    ProductEngine engine(g, budget.products);
    ElementSet result(g.order());
    if (op == "pi")
        result = engine.pi(s);
    else if (op == "piall")
        result = engine.pi_all(s);
    else if (op == "pin")
        result = engine.pi_n(s, k);
    else
        throw UsageError("--op must be pi, pin, or piall");
    ordered_json doc = ordered_json::object();
    doc["group"] = g.descriptor();
    doc["op"] = op;
    if (op == "pin") doc["n"] = k;
    doc["sequence"] = render_sequence(s);
    ordered_json idx = ordered_json::array();
    ordered_json names = ordered_json::array();
    for (int e : result.elements()) {
        idx.push_back(e);
        names.push_back(g.name(e));
    }
    doc["indices"] = idx;
    doc["elements"] = names;
    doc["size"] = result.size();
    doc["version"] = kVersion;
    emit(doc, f.format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-sum invariants over small finite groups"};
    app.require_subcommand(1);

    //group <desc> info
    auto* cmd_group = app.add_subcommand("group", "inspect a group");
    std::string group_desc, group_action = "info";
    CommonFlags group_flags;
    cmd_group->add_option("descriptor", group_desc, "group descriptor")->required();
    cmd_group->add_option("action", group_action, "info");
    add_common(cmd_group, group_flags);

    //invariant <desc> --which E|d|s
    auto* cmd_inv = app.add_subcommand("invariant", "compute E, d, or s with a certificate");
    std::string inv_desc, inv_which, inv_method, inv_cache;
    bool inv_no_cache = false;
    CommonFlags inv_flags;
    cmd_inv->add_option("descriptor", inv_desc, "group descriptor")->required();
    cmd_inv->add_option("--which", inv_which, "invariant: E, d, or s")->required();
    cmd_inv->add_option("--method", inv_method, "exhaustive | exhaustive-with-frontier");
    cmd_inv->add_option("--cache", inv_cache, "result cache file (also: ZEROSUM_CACHE)");
    cmd_inv->add_flag("--no-cache", inv_no_cache, "bypass the cache entirely");
    add_common(cmd_inv, inv_flags);

    //products <desc> --seq L --op pi|pin|piall [--n K]
    auto* cmd_prod = app.add_subcommand("products", "subsequence product sets");
    std::string prod_desc, prod_seq, prod_op;
    uint64_t prod_n = 0;
    CommonFlags prod_flags;
    cmd_prod->add_option("descriptor", prod_desc, "group descriptor")->required();
    cmd_prod->add_option("--seq", prod_seq, "sequence literal, e.g. 0^3,2,5")->required();
    cmd_prod->add_option("--op", prod_op, "pi | pin | piall")->required();
    cmd_prod->add_option("--n", prod_n, "subsequence length for pin");
    add_common(cmd_prod, prod_flags);

    //verify <check>
    auto* cmd_verify = app.add_subcommand("verify", "machine-check a statement");
    cmd_verify->require_subcommand(1);

    auto* v_egz = cmd_verify->add_subcommand("egz", "E(cyclic n) = 2n-1 on a range");
    uint64_t egz_max = 7;
    CommonFlags egz_flags;
    v_egz->add_option("--max-n", egz_max, "largest cyclic order checked");
    add_common(v_egz, egz_flags);

    auto* v_kneser = cmd_verify->add_subcommand("kneser", "set-product lower bound");
    uint64_t kneser_trials = 1000, kneser_seed = default_seed("kneser"), kneser_max = 12;
    CommonFlags kneser_flags;
    v_kneser->add_option("--trials", kneser_trials, "random instances per group");
    v_kneser->add_option("--seed", kneser_seed, "rng seed");
    v_kneser->add_option("--max-order", kneser_max, "catalog order cap");
    add_common(v_kneser, kneser_flags);

    auto* v_inverse = cmd_verify->add_subcommand("inverse", "structure of long bad sequences");
    uint64_t inv_n = 0, inv_k = 0;
    CommonFlags inverse_flags;
    v_inverse->add_option("--n", inv_n, "cyclic order")->required();
    v_inverse->add_option("--k", inv_k, "defect, sequence length is 2n-k")->required();
    add_common(v_inverse, inverse_flags);

    auto* v_basic = cmd_verify->add_subcommand("lemma-basic", "conjugation exponent properties");
    MetacyclicParams basic_params;
    CommonFlags basic_flags;
    v_basic->add_option("--s", basic_params.s, "prime s")->required();
    v_basic->add_option("--m", basic_params.m, "order of y")->required();
    v_basic->add_option("--r", basic_params.r, "conjugation exponent")->required();
    add_common(v_basic, basic_flags);

    auto* v_conj = cmd_verify->add_subcommand("lemma-conj", "product-set containment");
    MetacyclicParams conj_params;
    uint64_t conj_trials = 500, conj_seed = default_seed("lemma-conj"), conj_maxlen = 12;
    CommonFlags conj_flags;
    v_conj->add_option("--s", conj_params.s, "prime power s")->required();
    v_conj->add_option("--m", conj_params.m, "order of y")->required();
    v_conj->add_option("--r", conj_params.r, "conjugation exponent")->required();
    v_conj->add_option("--trials", conj_trials, "random trials");
    v_conj->add_option("--seed", conj_seed, "rng seed");
    v_conj->add_option("--max-len", conj_maxlen, "total sequence length cap");
    add_common(v_conj, conj_flags);

    auto* v_prop = cmd_verify->add_subcommand("prop41", "E = 3|G|/2 on dihedral and dicyclic");
    uint64_t prop_dihedral = 10, prop_dicyclic = 12;
    CommonFlags prop_flags;
    v_prop->add_option("--dihedral-max", prop_dihedral, "largest dihedral order");
    v_prop->add_option("--dicyclic-max", prop_dicyclic, "largest dicyclic order");
    add_common(v_prop, prop_flags);

    auto* v_gao = cmd_verify->add_subcommand("gao", "E = |G| + d across the catalog");
    uint64_t gao_max = 9;
    std::string gao_group;
    CommonFlags gao_flags;
    v_gao->add_option("--max-order", gao_max, "abelian catalog order cap");
    v_gao->add_option("--group", gao_group, "check a single group instead");
    add_common(v_gao, gao_flags);

    //sample main-theorem
    auto* cmd_sample = app.add_subcommand("sample", "randomized witness sampling");
    auto* s_main = cmd_sample->add_subcommand("main-theorem", "witnesses at length (3|G|-3)/2");
    cmd_sample->require_subcommand(1);
    std::string sample_group;
    uint64_t sample_trials = 200, sample_seed = default_seed("sample-main-theorem");
    uint64_t sample_ms = 30'000, sample_beam = 4096, sample_restarts = 32;
    CommonFlags sample_flags;
    s_main->add_option("--group", sample_group, "group descriptor")->required();
    s_main->add_option("--trials", sample_trials, "number of sampled sequences");
    s_main->add_option("--seed", sample_seed, "rng seed");
    s_main->add_option("--budget", sample_ms, "witness search time budget per trial (ms)");
    s_main->add_option("--beam", sample_beam, "beam width");
    s_main->add_option("--restarts", sample_restarts, "beam restarts");
    s_main->add_option("--format", sample_flags.format, "output format")
        ->check(CLI::IsMember({"human", "json"}));
    s_main->add_option("--jobs", sample_flags.jobs, "worker threads");

    //scan conjecture
    auto* cmd_scan = app.add_subcommand("scan", "catalog-wide tables");
    auto* scan_conj = cmd_scan->add_subcommand("conjecture", "E vs 3|G|/2 per group");
    cmd_scan->require_subcommand(1);
    uint64_t scan_max = 9;
    CommonFlags scan_flags;
    scan_conj->add_option("--max-order", scan_max, "catalog order cap");
    add_common(scan_conj, scan_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_group) {
            if (group_action != "info") throw UsageError("unknown group action '" + group_action + "'");
            return run_group_info(group_desc, group_flags);
        }
        if (*cmd_inv)
            return run_invariant(inv_desc, inv_which, inv_method, inv_cache, inv_no_cache,
                                 inv_flags);
        if (*cmd_prod) {
            if (prod_op == "pin" && prod_n == 0)
                throw UsageError("--op pin requires --n");
            return run_products(prod_desc, prod_seq, prod_op, prod_n, prod_flags);
        }
        if (*v_egz) return emit_verification(verify_egz_range(egz_max, to_budget(egz_flags)), egz_flags);
        if (*v_kneser)
            return emit_verification(
                verify_kneser(kneser_trials, kneser_seed, kneser_max, to_budget(kneser_flags)),
                kneser_flags);
        if (*v_inverse)
            return emit_verification(verify_inverse_structure(inv_n, inv_k, to_budget(inverse_flags)),
                                     inverse_flags);
        if (*v_basic) return emit_verification(verify_lemma_basic(basic_params), basic_flags);
        if (*v_conj)
            return emit_verification(verify_lemma_conjugation(conj_params, conj_trials, conj_seed,
                                                              to_budget(conj_flags), conj_maxlen),
                                     conj_flags);
        if (*v_prop)
            return emit_verification(
                verify_prop41(prop_dihedral, prop_dicyclic, to_budget(prop_flags)), prop_flags);
        if (*v_gao) {
            if (!gao_group.empty())
                return emit_verification(
                    gao_relation_check(build_group(gao_group), to_budget(gao_flags)), gao_flags);
            return emit_verification(verify_gao_catalog(gao_max, to_budget(gao_flags)), gao_flags);
        }
        if (*s_main) {
            SearchBudget b;
            b.jobs = sample_flags.jobs;
            b.witness_time_ms = sample_ms;
            b.beam_width = sample_beam;
            b.beam_restarts = uint32_t(sample_restarts);
            FiniteGroup g = build_group(sample_group);
            return emit_verification(sample_main_theorem(g, sample_trials, sample_seed, b),
                                     sample_flags);
        }
        if (*scan_conj)
            return emit_verification(scan_conjecture(scan_max, to_budget(scan_flags)), scan_flags);
        throw UsageError("no subcommand selected");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 2;
    }
}
