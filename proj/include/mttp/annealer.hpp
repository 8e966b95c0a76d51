#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "mttp/neighborhood.hpp"

namespace mttp {

struct SAConfig {
    double t_initial = 400.0;
    double t_final = 1.0;
    double alpha = 0.99;
    int n_iterations = 100;
    int burn_in = -1;  // -1 means 20*n
    std::uint64_t seed = 0;

    void validate() const;
    int effective_burn_in(int n) const { return burn_in >= 0 ? burn_in : default_burn_in(n); }
};

struct AnnealResult {
    std::optional<Schedule> best_schedule;  // absent until a feasible best exists
    long long best_dist = -1;
    std::uint64_t solutions_explored = 0;
    std::uint64_t accepted = 0;
    double elapsed_seconds = 0.0;
};

// Hooks for the throughput harness and tests; both optional.
struct AnnealObserver {
    std::function<void(long long dist)> on_evaluation;
    std::function<void(const Schedule&, long long dist)> on_best_update;
};

// Metropolis rule: always take improvements, otherwise accept when
// exp(-delta/temp) beats a uniform draw. Zero-cost moves are always taken.
bool accept(long long delta, double temp, std::mt19937_64& rng);

// Number of inner-loop passes per outer iteration:
// smallest m with t_initial * alpha^m <= t_final.
std::uint64_t sweep_length(const SAConfig& cfg);

// One annealing replica: reheated geometric cooling over the mirrored
// neighborhood, best updated only through the feasibility gate.
// Deterministic given (inst, cfg, rng state).
AnnealResult anneal(const Instance& inst, const SAConfig& cfg, std::mt19937_64& rng,
                    const AnnealObserver* observer = nullptr);

// Convenience wrapper seeding the generator from cfg.seed.
AnnealResult anneal_seeded(const Instance& inst, const SAConfig& cfg,
                           const AnnealObserver* observer = nullptr);

}  // namespace mttp
