#pragma once

#include "mttp/annealer.hpp"

namespace mttp {

struct RunConfig {
    int threads = 1;  // replica count T, one OpenMP thread each
    SAConfig sa;
};

struct RunStats {
    int threads = 0;
    SAConfig sa;
    std::string instance_name;
    std::vector<AnnealResult> per_replica;
    std::uint64_t total_solutions_explored = 0;
    double wall_elapsed_seconds = 0.0;
    double solutions_per_second = 0.0;
    long long best_dist = -1;
    int best_replica = -1;  // -1 when no replica found a feasible schedule
};

struct PsaOutcome {
    AnnealResult best;  // best.best_schedule absent when nothing feasible was found
    RunStats stats;
};

// splitmix64 of (seed, replica index); fixed so runs reproduce across
// platforms and replicas stay decorrelated.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t replica);

// T independent replicas on OpenMP threads, joined before the reduction to
// the least-distance feasible schedule (ties to the lowest replica index).
PsaOutcome run_psa(const Instance& inst, const RunConfig& cfg);

// Serial reference: same replicas, same seeds, run one after another.
// Must produce per-replica results identical to run_psa.
PsaOutcome run_psa_serial(const Instance& inst, const RunConfig& cfg);

// Ratio of solutions explored per second; throws on mismatched configs or a
// baseline that is not single-threaded.
double compute_speedup(const RunStats& baseline, const RunStats& parallel);

}  // namespace mttp
