#pragma once

#include <cstdint>
#include <optional>

#include "mttp/schedule.hpp"

namespace mttp {

struct EnumerationReport {
    int n = 0;
    int k = 0;
    std::uint64_t count_feasible = 0;
    long long optimum_distance = -1;
    std::optional<Schedule> optimum_schedule;
};

// Exhaustively enumerate every mirrored double round robin (all first-half
// round structures times all first-half venue assignments) and report the
// feasible count and the minimum-distance witness. Guarded to n <= 6.
EnumerationReport enumerate_feasible(const Instance& inst);

// Independent recomputation of the travel objective by explicit venue-list
// construction; kept separate from the production distance code on purpose.
long long oracle_team_distance(const Schedule& s, const Instance& inst, int t);
long long oracle_total_distance(const Schedule& s, const Instance& inst);

}  // namespace mttp
