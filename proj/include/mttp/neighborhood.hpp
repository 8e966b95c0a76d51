#pragma once

#include <random>

#include "mttp/schedule.hpp"

namespace mttp {

enum class MoveKind {
    SwapTeams,
    SwapRounds,
    SwapHomes,
    PartialSwapRounds,
    PartialSwapTeams,
};

// All moves act on the first half of a mirrored schedule; the second half is
// rederived, so mirror preservation holds by construction.

// Exchange the full game rows of teams i and j, head-to-head games untouched.
Schedule swap_teams(const Schedule& s, int i, int j);

// Exchange first-half rounds r1 and r2 (second half follows by mirror).
Schedule swap_rounds(const Schedule& s, int r1, int r2);

// Flip the venues of the two games between teams i and j.
Schedule swap_homes(const Schedule& s, int i, int j);

// Exchange team t's games between first-half rounds r1 and r2, carrying the
// minimal chain of other teams needed to keep both rounds a perfect matching.
Schedule partial_swap_rounds(const Schedule& s, int t, int r1, int r2);

// Exchange the round-r games of teams i and j, carrying the chain of other
// first-half rounds needed to keep both rows a round robin. Undefined when
// i plays j in round r.
Schedule partial_swap_teams(const Schedule& s, int i, int j, int r);

// Polygon-method mirrored schedule: fixed team n alternates venue starting
// at home, the rotating teams pair up around the circle.
Schedule canonical_schedule(int n);

// Random mirrored schedule: canonical construction followed by burn_in
// random moves.
Schedule initial_schedule(const Instance& inst, std::mt19937_64& rng, int burn_in);

struct SampledMove {
    MoveKind kind;
    int a = 0;  // team (SwapTeams/SwapHomes/PartialSwapTeams) or team t (PartialSwapRounds) or r1
    int b = 0;  // second team or r2
    int c = 0;  // round, for PartialSwapTeams / PartialSwapRounds
};

// Uniform move kind and uniform valid parameters; invalid tuples are
// resampled (kind included).
SampledMove sample_move(const Schedule& s, std::mt19937_64& rng);

Schedule apply_move(const Schedule& s, const SampledMove& m);

// apply_move(s, sample_move(s, rng)): a fresh copy, input untouched.
Schedule select_random_neighbor(const Schedule& s, std::mt19937_64& rng);

constexpr int default_burn_in(int n) { return 20 * n; }

}  // namespace mttp
