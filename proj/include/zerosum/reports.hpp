#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "zerosum/sequence.hpp"

namespace zerosum {

using ordered_json = nlohmann::ordered_json;

struct InvariantReport {
    std::string which;  //"E" | "d" | "s"
    std::string group;
    uint64_t value = 0;
    GSequence certificate;
    std::string method;      //"exhaustive" | "exhaustive-with-frontier"
    ordered_json counters = ordered_json::object();
    uint64_t elapsed_ms = 0;
};

struct VerificationReport {
    std::string check;
    std::string group;  //empty when the check spans several groups
    ordered_json params = ordered_json::object();
    std::string verdict;  //"pass" | "fail" | "inconclusive"
    ordered_json counterexample;  //null unless fail
    ordered_json counters = ordered_json::object();
    uint64_t seed = 0;
    bool seeded = false;
    uint64_t elapsed_ms = 0;
};

//fixed 9-key result objects: {invariant|check, group, params, value|verdict,
//certificate, counters, seed, elapsed_ms, version}.  a verification's
//certificate slot carries its counterexample payload (null on pass); seed is
//null for unseeded computations.  key order is stable for byte-identical
//reruns.
ordered_json invariant_to_json(const InvariantReport& rep, ordered_json params);
ordered_json verification_to_json(const VerificationReport& rep, ordered_json extra_params);

//flat table rendering of the same content for terminal output
std::string human_readable(const ordered_json& result);

//one row per scanned group; only defined for conjecture-scan reports
std::string scan_to_csv(const VerificationReport& rep);

//0 pass, 1 fail, 3 inconclusive
int exit_code_for_verdict(const std::string& verdict);

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    uint64_t ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return uint64_t(std::chrono::duration_cast<std::chrono::milliseconds>(d).count());
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace zerosum
