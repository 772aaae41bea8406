#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zerosum/enumerate.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum {

//level-scan kernels over the canonical multiset enumeration.  the parallel
//variants partition a level by its smallest element; every partition is an
//independent canonical sub-enumeration, so results and work counters are
//identical to the serial reference for any thread count.

inline int effective_jobs(int jobs) {
#ifdef _OPENMP
    if (jobs <= 0) return omp_get_max_threads();
    return jobs;
#else
    (void)jobs;
    return 1;
#endif
}

struct LevelScanResult {
    std::optional<GSequence> witness;  //canonically first match
    uint64_t scanned = 0;              //serial-order work: rank+1, or the full level
};

//serial reference: first multiset matching pred in canonical order
template <class Pred>
LevelScanResult scan_level_serial(int n, uint64_t len, Pred&& pred) {
    LevelScanResult res;
    enumerate_multisets(n, len, [&](const GSequence& s) {
        if (pred(s)) {
            res.witness = s;
            return false;
        }
        return true;
    });
    res.scanned = res.witness ? canonical_rank(*res.witness) + 1 : multiset_count(n, len);
    return res;
}

template <class Pred>
LevelScanResult scan_level_parallel(int n, uint64_t len, int jobs, Pred&& pred) {
    if (len == 0 || n == 1) return scan_level_serial(n, len, pred);
    std::vector<std::optional<GSequence>> hits(static_cast<size_t>(n));
    std::atomic<int> best{n};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(effective_jobs(jobs))
#endif
    for (int first = 0; first < n; ++first) {
        if (first > best.load(std::memory_order_relaxed)) continue;
        uint64_t steps = 0;
        enumerate_multisets_first(n, len, first, [&](const GSequence& s) {
            if ((++steps & 0xff) == 0 && first > best.load(std::memory_order_relaxed))
                return false;
            if (pred(s)) {
                hits[first] = s;
                int cur = best.load();
                while (first < cur && !best.compare_exchange_weak(cur, first)) {
                }
                return false;
            }
            return true;
        });
    }
    LevelScanResult res;
    for (int first = 0; first < n; ++first)
        if (hits[first]) {
            res.witness = std::move(hits[first]);
            break;
        }
    res.scanned = res.witness ? canonical_rank(*res.witness) + 1 : multiset_count(n, len);
    return res;
}

template <class Pred>
LevelScanResult scan_level(int n, uint64_t len, int jobs, Pred&& pred) {
    if (effective_jobs(jobs) <= 1) return scan_level_serial(n, len, pred);
    return scan_level_parallel(n, len, jobs, pred);
}

//all matches of a level in canonical order; scans the full level
template <class Pred>
std::vector<GSequence> collect_level_serial(int n, uint64_t len, Pred&& pred) {
    std::vector<GSequence> out;
    enumerate_multisets(n, len, [&](const GSequence& s) {
        if (pred(s)) out.push_back(s);
        return true;
    });
    return out;
}

template <class Pred>
std::vector<GSequence> collect_level_parallel(int n, uint64_t len, int jobs, Pred&& pred) {
    std::vector<std::vector<GSequence>> parts(static_cast<size_t>(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(effective_jobs(jobs))
#endif
    for (int first = 0; first < n; ++first)
        enumerate_multisets_first(n, len, first, [&](const GSequence& s) {
            if (pred(s)) parts[first].push_back(s);
            return true;
        });
    std::vector<GSequence> out;
    if (len == 0) {
        GSequence empty(n);
        if (pred(empty)) out.push_back(empty);
        return out;
    }
    for (auto& p : parts)
        for (auto& s : p) out.push_back(std::move(s));
    return out;
}

template <class Pred>
std::vector<GSequence> collect_level(int n, uint64_t len, int jobs, Pred&& pred) {
    if (effective_jobs(jobs) <= 1 || len == 0) return collect_level_serial(n, len, pred);
    return collect_level_parallel(n, len, jobs, pred);
}

//independent trials with deterministic per-index results
template <class Fn>
void parallel_trials(int jobs, uint64_t trials, Fn&& fn) {
    int j = effective_jobs(jobs);
    if (j <= 1) {
        for (uint64_t i = 0; i < trials; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(j)
#endif
    for (long long i = 0; i < (long long)trials; ++i) fn(uint64_t(i));
}

}  // namespace zerosum
