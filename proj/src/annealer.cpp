#include "mttp/annealer.hpp"

#include <chrono>
#include <cmath>

namespace mttp {

void SAConfig::validate() const {
    if (!(t_final > 0.0) || !(t_final < t_initial))
        throw std::invalid_argument("need 0 < t_final < t_initial");
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0, 1)");
    if (n_iterations < 1)
        throw std::invalid_argument("n_iterations must be >= 1");
}

namespace {

// 53-bit uniform in [0, 1); identical across platforms for a given engine state.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

bool accept(long long delta, double temp, std::mt19937_64& rng) {
    if (!(temp > 0.0)) throw std::invalid_argument("temperature must be positive");
    return delta < 0 || std::exp(-static_cast<double>(delta) / temp) > uniform01(rng);
}

std::uint64_t sweep_length(const SAConfig& cfg) {
    cfg.validate();
    return static_cast<std::uint64_t>(
        std::ceil(std::log(cfg.t_final / cfg.t_initial) / std::log(cfg.alpha)));
}

AnnealResult anneal(const Instance& inst, const SAConfig& cfg, std::mt19937_64& rng,
                    const AnnealObserver* observer) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();

    Schedule curr = initial_schedule(inst, rng, cfg.effective_burn_in(inst.n()));
    long long curr_dist = travel_distance(curr, inst);

    AnnealResult result;
    const std::uint64_t sweeps = sweep_length(cfg);

    for (int iter = 0; iter < cfg.n_iterations; ++iter) {
        double temp = cfg.t_initial;
        // Reheat: restart each sweep from the incumbent best. Until a feasible
        // best exists the search continues from wherever it stands.
        if (result.best_schedule) {
            curr = *result.best_schedule;
            curr_dist = result.best_dist;
        }
        for (std::uint64_t step = 0; step < sweeps; ++step) {
            Schedule candidate = select_random_neighbor(curr, rng);
            long long cand_dist = travel_distance(candidate, inst);
            ++result.solutions_explored;
            if (observer && observer->on_evaluation) observer->on_evaluation(cand_dist);

            long long delta = cand_dist - curr_dist;
            if (accept(delta, temp, rng)) {
                curr = std::move(candidate);
                curr_dist = cand_dist;
                ++result.accepted;
                if (!result.best_schedule || cand_dist < result.best_dist) {
                    if (check_schedule(curr, inst).feasible()) {
                        result.best_schedule = curr;
                        result.best_dist = cand_dist;
                        if (observer && observer->on_best_update)
                            observer->on_best_update(curr, cand_dist);
                    }
                }
            }
            temp *= cfg.alpha;
        }
    }

    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

AnnealResult anneal_seeded(const Instance& inst, const SAConfig& cfg,
                           const AnnealObserver* observer) {
    std::mt19937_64 rng(cfg.seed);
    return anneal(inst, cfg, rng, observer);
}

}  // namespace mttp
