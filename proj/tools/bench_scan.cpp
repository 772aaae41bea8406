//compares the serial level scan against the parallel one on an abelian
//badness predicate and reports wall times plus agreement of the results
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "zerosum/group.hpp"
#include "zerosum/invariants.hpp"
#include "zerosum/reports.hpp"
#include "zerosum/scan.hpp"
#include "zerosum/sequence.hpp"

using namespace zerosum;

int main(int argc, char** argv) {
    CLI::App app{"level-scan benchmark: serial reference vs parallel kernel"};
    std::string desc = "c3xc3";
    uint64_t len = 12, target = 0;
    int jobs = 0;
    int repeats = 3;
    app.add_option("--group", desc, "abelian group descriptor");
    app.add_option("--len", len, "level length to scan");
    app.add_option("--target", target, "product-one target length (default |G|)");
    app.add_option("--jobs", jobs, "threads for the parallel kernel (0 = all cores)");
    app.add_option("--repeats", repeats, "timed repetitions");
    CLI11_PARSE(app, argc, argv);

    FiniteGroup g = build_group(desc);
    if (!g.is_abelian()) {
        std::cerr << "error: benchmark predicate needs an abelian group\n";
        return 2;
    }
    if (target == 0) target = uint64_t(g.order());
    auto pred = [&](const GSequence& s) {
        return !abelian_pi_n_contains(g, s, target, g.identity());
    };

    std::cout << "group " << g.descriptor() << ", level " << len << ", target " << target
              << ", jobs " << effective_jobs(jobs) << "\n";
    uint64_t serial_best = ~0ull, parallel_best = ~0ull;
    LevelScanResult serial_res, parallel_res;
    for (int i = 0; i < repeats; ++i) {
        Stopwatch w1;
        serial_res = scan_level_serial(g.order(), len, pred);
        serial_best = std::min(serial_best, w1.ms());
        Stopwatch w2;
        parallel_res = scan_level_parallel(g.order(), len, jobs, pred);
        parallel_best = std::min(parallel_best, w2.ms());
    }
    std::cout << "serial:   " << serial_best << " ms, scanned " << serial_res.scanned << "\n";
    std::cout << "parallel: " << parallel_best << " ms, scanned " << parallel_res.scanned << "\n";
    bool same_witness = serial_res.witness.has_value() == parallel_res.witness.has_value() &&
                        (!serial_res.witness || *serial_res.witness == *parallel_res.witness);
    bool agree = same_witness && serial_res.scanned == parallel_res.scanned;
    std::cout << "results " << (agree ? "agree" : "DISAGREE");
    if (serial_res.witness) std::cout << ", witness " << render_sequence(*serial_res.witness);
    std::cout << "\n";
    if (parallel_best > 0)
        std::cout << "speedup " << double(serial_best) / double(parallel_best) << "x\n";
    return agree ? 0 : 1;
}
