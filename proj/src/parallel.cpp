#include "mttp/parallel.hpp"

#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mttp {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t replica) {
    std::uint64_t z = seed + (replica + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

PsaOutcome reduce(const Instance& inst, const RunConfig& cfg,
                  std::vector<AnnealResult> replicas, double wall_seconds) {
    RunStats stats;
    stats.threads = cfg.threads;
    stats.sa = cfg.sa;
    stats.instance_name = inst.name();
    stats.wall_elapsed_seconds = wall_seconds;
    for (size_t i = 0; i < replicas.size(); ++i) {
        stats.total_solutions_explored += replicas[i].solutions_explored;
        if (replicas[i].best_schedule &&
            (stats.best_replica < 0 || replicas[i].best_dist < stats.best_dist)) {
            stats.best_dist = replicas[i].best_dist;
            stats.best_replica = static_cast<int>(i);
        }
    }
    stats.solutions_per_second =
        wall_seconds > 0.0 ? static_cast<double>(stats.total_solutions_explored) / wall_seconds
                           : 0.0;

    PsaOutcome out;
    if (stats.best_replica >= 0) out.best = replicas[stats.best_replica];
    stats.per_replica = std::move(replicas);
    return PsaOutcome{std::move(out.best), std::move(stats)};
}

}  // namespace

PsaOutcome run_psa(const Instance& inst, const RunConfig& cfg) {
    if (cfg.threads < 1) throw std::invalid_argument("thread count must be >= 1");
    cfg.sa.validate();
    const int replica_count = cfg.threads;
    std::vector<AnnealResult> replicas(replica_count);

    const auto start = std::chrono::steady_clock::now();
#ifdef _OPENMP
#pragma omp parallel for num_threads(cfg.threads) schedule(static, 1)
#endif
    for (int i = 0; i < replica_count; ++i) {
        std::mt19937_64 rng(mix_seed(cfg.sa.seed, static_cast<std::uint64_t>(i)));
        replicas[i] = anneal(inst, cfg.sa, rng);
    }
    // Implicit join of the parallel region is the synchronization point; the
    // reduction below only reads replica slots written before it.
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return reduce(inst, cfg, std::move(replicas), wall);
}

PsaOutcome run_psa_serial(const Instance& inst, const RunConfig& cfg) {
    if (cfg.threads < 1) throw std::invalid_argument("thread count must be >= 1");
    cfg.sa.validate();
    std::vector<AnnealResult> replicas(cfg.threads);

    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < cfg.threads; ++i) {
        std::mt19937_64 rng(mix_seed(cfg.sa.seed, static_cast<std::uint64_t>(i)));
        replicas[i] = anneal(inst, cfg.sa, rng);
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return reduce(inst, cfg, std::move(replicas), wall);
}

double compute_speedup(const RunStats& baseline, const RunStats& parallel) {
    if (baseline.threads != 1)
        throw std::invalid_argument("speedup baseline must be a single-threaded run");
    const SAConfig& a = baseline.sa;
    const SAConfig& b = parallel.sa;
    if (baseline.instance_name != parallel.instance_name || a.t_initial != b.t_initial ||
        a.t_final != b.t_final || a.alpha != b.alpha || a.n_iterations != b.n_iterations ||
        a.burn_in != b.burn_in)
        throw std::invalid_argument("speedup comparison requires identical instance and config");
    if (baseline.solutions_per_second <= 0.0)
        throw std::invalid_argument("baseline throughput is not positive");
    return parallel.solutions_per_second / baseline.solutions_per_second;
}

}  // namespace mttp
