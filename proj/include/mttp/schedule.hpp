#pragma once

#include <istream>
#include <string>
#include <vector>

#include "mttp/instance.hpp"

namespace mttp {

// A double-round-robin schedule as a signed opponent table.
// at(t, r) = +j means team t hosts team j in round r, -j means t plays away
// at j's venue. Teams 1..n, rounds 1..2(n-1). Value-semantic.
class Schedule {
public:
    Schedule() = default;
    Schedule(int n, std::vector<int> opp);

    int n() const { return n_; }
    int rounds() const { return 2 * (n_ - 1); }

    int at(int t, int r) const { return opp_[(t - 1) * rounds() + (r - 1)]; }
    int& at(int t, int r) { return opp_[(t - 1) * rounds() + (r - 1)]; }

    bool operator==(const Schedule&) const = default;

private:
    int n_ = 0;
    std::vector<int> opp_;
};

struct Violation {
    int team;
    int round;
    std::string what;
};

struct Feasibility {
    bool structure_ok = false;
    bool mirror_ok = false;
    bool atmost_ok = false;
    std::vector<Violation> violations;

    bool feasible() const { return structure_ok && mirror_ok && atmost_ok; }
};

// Consistency (t hosts j <=> j visits t), no self-play, each half a single
// round robin, every pairing once home and once away overall.
bool is_valid_structure(const Schedule& s);

// Round r+(n-1) repeats round r with venues reversed, r = 1..n-1.
bool is_mirrored(const Schedule& s);

// No team has more than k consecutive home rounds or away rounds.
bool atmost_satisfied(const Schedule& s, int k);

Feasibility check_schedule(const Schedule& s, const Instance& inst);

// Total travel over all teams. Defined for any structurally valid schedule;
// feasibility is not required.
long long travel_distance(const Schedule& s, const Instance& inst);

// Walk of team t: start at home, visit the venue of each round in order
// (home games at home, away games at the opponent), return home at the end.
// Consecutive away games travel directly, consecutive home games cost 0.
long long team_itinerary_distance(const Schedule& s, const Instance& inst, int t);

// Text format: n lines, 2(n-1) signed integers per line, '+' optional.
std::string render_schedule(const Schedule& s);
Schedule parse_schedule(std::istream& in);

}  // namespace mttp
