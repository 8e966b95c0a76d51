#include "mttp/oracle.hpp"

#include <cstdlib>
#include <vector>

namespace mttp {

long long oracle_team_distance(const Schedule& s, const Instance& inst, int t) {
    // Build the full venue list first, then sum leg by leg.
    std::vector<int> venues;
    venues.push_back(t);
    for (int r = 1; r <= s.rounds(); ++r) {
        int v = s.at(t, r);
        venues.push_back(v > 0 ? t : -v);
    }
    venues.push_back(t);
    long long total = 0;
    for (size_t leg = 1; leg < venues.size(); ++leg)
        total += inst.dist(venues[leg - 1], venues[leg]);
    return total;
}

long long oracle_total_distance(const Schedule& s, const Instance& inst) {
    long long total = 0;
    for (int t = 1; t <= s.n(); ++t)
        total += oracle_team_distance(s, inst, t);
    return total;
}

namespace {

struct Enumerator {
    const Instance& inst;
    int n;
    int half;
    std::vector<std::vector<bool>> met;          // met[a][b]: pairing already used
    std::vector<std::pair<int, int>> games;  // first-half games in round-major order
    EnumerationReport report;

    explicit Enumerator(const Instance& instance)
        : inst(instance),
          n(instance.n()),
          half(instance.n() - 1),
          met(n + 1, std::vector<bool>(n + 1, false)) {
        report.n = n;
        report.k = inst.k();
    }

    void run() {
        build_round(1, std::vector<bool>(n + 1, false), 1);
    }

    // Enumerate perfect matchings of one round over still-unmet pairs, always
    // extending from the lowest unpaired team so each matching appears once.
    void build_round(int round, std::vector<bool> used, int from) {
        int a = from;
        while (a <= n && used[a]) ++a;
        if (a > n) {
            if (round == half)
                assign_venues();
            else
                build_round(round + 1, std::vector<bool>(n + 1, false), 1);
            return;
        }
        used[a] = true;
        for (int b = a + 1; b <= n; ++b) {
            if (used[b] || met[a][b]) continue;
            used[b] = true;
            met[a][b] = true;
            games.push_back({a, b});
            build_round(round, used, a + 1);
            games.pop_back();
            met[a][b] = false;
            used[b] = false;
        }
        used[a] = false;
    }

    // With the first-half structure fixed, branch on home/away per game,
    // pruning any first-half home or away run longer than k.
    void assign_venues() {
        std::vector<int> table(static_cast<size_t>(n) * 2 * half, 0);
        std::vector<int> run(n + 1, 0);
        std::vector<signed char> last(n + 1, 0);  // +1 home, -1 away, 0 none
        venue_dfs(0, table, run, last);
    }

    void venue_dfs(size_t game_idx, std::vector<int>& table, std::vector<int>& run,
                   std::vector<signed char>& last) {
        if (game_idx == games.size()) {
            finish(table);
            return;
        }
        int round = static_cast<int>(game_idx) / (n / 2) + 1;
        auto [a, b] = games[game_idx];
        for (int home_is_a = 0; home_is_a < 2; ++home_is_a) {
            int home = home_is_a ? a : b;
            int away = home_is_a ? b : a;
            int run_home = (last[home] == +1) ? run[home] + 1 : 1;
            int run_away = (last[away] == -1) ? run[away] + 1 : 1;
            if (run_home > inst.k() || run_away > inst.k()) continue;

            auto saved_run_h = run[home];
            auto saved_run_a = run[away];
            auto saved_last_h = last[home];
            auto saved_last_a = last[away];
            run[home] = run_home;
            last[home] = +1;
            run[away] = run_away;
            last[away] = -1;
            table[(home - 1) * 2 * half + (round - 1)] = away;
            table[(away - 1) * 2 * half + (round - 1)] = -home;

            venue_dfs(game_idx + 1, table, run, last);

            run[home] = saved_run_h;
            last[home] = saved_last_h;
            run[away] = saved_run_a;
            last[away] = saved_last_a;
        }
    }

    void finish(std::vector<int>& table) {
        for (int t = 1; t <= n; ++t)
            for (int r = 1; r <= half; ++r)
                table[(t - 1) * 2 * half + (half + r - 1)] = -table[(t - 1) * 2 * half + (r - 1)];
        Schedule s(n, table);
        if (!atmost_satisfied(s, inst.k())) return;  // mirror-boundary runs
        ++report.count_feasible;
        long long dist = oracle_total_distance(s, inst);
        if (!report.optimum_schedule || dist < report.optimum_distance) {
            report.optimum_distance = dist;
            report.optimum_schedule = s;
        }
    }
};

}  // namespace

EnumerationReport enumerate_feasible(const Instance& inst) {
    if (inst.n() > 6)
        throw DomainError("exhaustive enumeration is limited to n <= 6, got " +
                          std::to_string(inst.n()));
    Enumerator e(inst);
    e.run();
    return e.report;
}

}  // namespace mttp
