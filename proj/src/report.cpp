#include "zerosum/reports.hpp"

#include <sstream>

#include "zerosum/errors.hpp"
#include "zerosum/sequence.hpp"
#include "zerosum/version.hpp"

namespace zerosum {

namespace {

ordered_json merged_params(ordered_json base, const ordered_json& extra) {
    if (extra.is_object())
        for (auto it = extra.begin(); it != extra.end(); ++it) base[it.key()] = it.value();
    return base;
}

}  // namespace

ordered_json invariant_to_json(const InvariantReport& rep, ordered_json params) {
    ordered_json out = ordered_json::object();
    out["invariant"] = rep.which;
    out["group"] = rep.group;
    ordered_json p = ordered_json::object();
    p["method"] = rep.method;
    out["params"] = merged_params(p, params);
    out["value"] = rep.value;
    out["certificate"] = render_sequence(rep.certificate);
    out["counters"] = rep.counters;
    out["seed"] = nullptr;
    out["elapsed_ms"] = rep.elapsed_ms;
    out["version"] = kVersion;
    return out;
}

ordered_json verification_to_json(const VerificationReport& rep, ordered_json extra_params) {
    ordered_json out = ordered_json::object();
    out["check"] = rep.check;
    if (rep.group.empty())
        out["group"] = nullptr;
    else
        out["group"] = rep.group;
    out["params"] = merged_params(rep.params, extra_params);
    out["verdict"] = rep.verdict;
    if (rep.counterexample.is_null())
        out["certificate"] = nullptr;
    else
        out["certificate"] = rep.counterexample;
    out["counters"] = rep.counters;
    if (rep.seeded)
        out["seed"] = rep.seed;
    else
        out["seed"] = nullptr;
    out["elapsed_ms"] = rep.elapsed_ms;
    out["version"] = kVersion;
    return out;
}

std::string human_readable(const ordered_json& result) {
    std::ostringstream out;
    for (auto it = result.begin(); it != result.end(); ++it) {
        out << it.key() << ": ";
        if (it.value().is_string())
            out << it.value().get<std::string>();
        else
            out << it.value().dump();
        out << '\n';
    }
    return out.str();
}

std::string scan_to_csv(const VerificationReport& rep) {
    if (rep.check != "conjecture-scan" || !rep.counters.contains("rows"))
        throw UsageError("csv output is only available for scan results");
    std::ostringstream out;
    out << "group,order,E,d,gap,bound,within\n";
    for (const auto& row : rep.counters["rows"]) {
        out << row["group"].get<std::string>() << ',' << row["order"].get<uint64_t>() << ',';
        if (row.contains("skipped")) {
            out << ",,,,skipped\n";
            continue;
        }
        out << row["E"].get<uint64_t>() << ',' << row["d"].get<uint64_t>() << ','
            << row["gap"].get<int64_t>() << ',' << row["bound"].get<uint64_t>() << ','
            << (row["within"].get<bool>() ? "yes" : "no") << '\n';
    }
    return out.str();
}

int exit_code_for_verdict(const std::string& verdict) {
    if (verdict == "pass") return 0;
    if (verdict == "fail") return 1;
    return 3;
}

}  // namespace zerosum
