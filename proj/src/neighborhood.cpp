#include "mttp/neighborhood.hpp"

#include <cstdlib>

namespace mttp {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void check_team(const Schedule& s, int t) {
    require(t >= 1 && t <= s.n(), "team index " + std::to_string(t) + " out of range");
}

void check_half_round(const Schedule& s, int r) {
    require(r >= 1 && r <= s.n() - 1,
            "round " + std::to_string(r) + " outside first half 1.." + std::to_string(s.n() - 1));
}

// Rederive rounds n..2(n-1) from the first half.
void apply_mirror(Schedule& s) {
    const int half = s.n() - 1;
    for (int t = 1; t <= s.n(); ++t)
        for (int r = 1; r <= half; ++r)
            s.at(t, r + half) = -s.at(t, r);
}

int sgn(int v) { return v > 0 ? 1 : -1; }

}  // namespace

Schedule swap_teams(const Schedule& s, int i, int j) {
    check_team(s, i);
    check_team(s, j);
    require(i != j, "swap_teams needs two distinct teams");
    Schedule out = s;
    const int half = s.n() - 1;
    for (int r = 1; r <= half; ++r) {
        int a = out.at(i, r);
        int b = out.at(j, r);
        if (std::abs(a) == j) continue;  // head-to-head keeps its round and venue
        out.at(i, r) = b;
        out.at(j, r) = a;
        out.at(std::abs(a), r) = sgn(out.at(std::abs(a), r)) * j;
        out.at(std::abs(b), r) = sgn(out.at(std::abs(b), r)) * i;
    }
    apply_mirror(out);
    return out;
}

Schedule swap_rounds(const Schedule& s, int r1, int r2) {
    check_half_round(s, r1);
    check_half_round(s, r2);
    require(r1 != r2, "swap_rounds needs two distinct rounds");
    Schedule out = s;
    for (int t = 1; t <= s.n(); ++t)
        std::swap(out.at(t, r1), out.at(t, r2));
    apply_mirror(out);
    return out;
}

Schedule swap_homes(const Schedule& s, int i, int j) {
    check_team(s, i);
    check_team(s, j);
    require(i != j, "swap_homes needs two distinct teams");
    Schedule out = s;
    for (int r = 1; r <= s.n() - 1; ++r) {
        if (std::abs(out.at(i, r)) == j) {
            out.at(i, r) = -out.at(i, r);
            out.at(j, r) = -out.at(j, r);
        }
    }
    apply_mirror(out);
    return out;
}

Schedule partial_swap_rounds(const Schedule& s, int t, int r1, int r2) {
    check_team(s, t);
    check_half_round(s, r1);
    check_half_round(s, r2);
    require(r1 != r2, "partial_swap_rounds needs two distinct rounds");
    // Closure of teams whose games must travel with t between the two rounds.
    std::vector<bool> in_chain(s.n() + 1, false);
    std::vector<int> stack{t};
    in_chain[t] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int r : {r1, r2}) {
            int v = std::abs(s.at(u, r));
            if (!in_chain[v]) {
                in_chain[v] = true;
                stack.push_back(v);
            }
        }
    }
    Schedule out = s;
    for (int u = 1; u <= s.n(); ++u)
        if (in_chain[u]) std::swap(out.at(u, r1), out.at(u, r2));
    apply_mirror(out);
    return out;
}

Schedule partial_swap_teams(const Schedule& s, int i, int j, int r) {
    check_team(s, i);
    check_team(s, j);
    check_half_round(s, r);
    require(i != j, "partial_swap_teams needs two distinct teams");
    require(std::abs(s.at(i, r)) != j, "partial_swap_teams is undefined when the teams meet in that round");
    const int half = s.n() - 1;
    // where_i[x] = first-half round in which team i meets team x
    std::vector<int> where_i(s.n() + 1, 0), where_j(s.n() + 1, 0);
    for (int rr = 1; rr <= half; ++rr) {
        where_i[std::abs(s.at(i, rr))] = rr;
        where_j[std::abs(s.at(j, rr))] = rr;
    }
    // Closure of rounds whose i/j games must be exchanged together.
    std::vector<bool> in_chain(half + 1, false);
    std::vector<int> stack{r};
    in_chain[r] = true;
    while (!stack.empty()) {
        int rr = stack.back();
        stack.pop_back();
        for (int next : {where_i[std::abs(s.at(j, rr))], where_j[std::abs(s.at(i, rr))]}) {
            if (!in_chain[next]) {
                in_chain[next] = true;
                stack.push_back(next);
            }
        }
    }
    Schedule out = s;
    for (int rr = 1; rr <= half; ++rr) {
        if (!in_chain[rr]) continue;
        int a = out.at(i, rr);
        int b = out.at(j, rr);
        out.at(i, rr) = b;
        out.at(j, rr) = a;
        out.at(std::abs(a), rr) = sgn(out.at(std::abs(a), rr)) * j;
        out.at(std::abs(b), rr) = sgn(out.at(std::abs(b), rr)) * i;
    }
    apply_mirror(out);
    return out;
}

Schedule canonical_schedule(int n) {
    if (n < 4 || n % 2 != 0)
        throw DomainError("schedule needs even n >= 4, got " + std::to_string(n));
    const int half = n - 1;
    Schedule s(n, std::vector<int>(static_cast<size_t>(n) * 2 * half, 1));
    for (int r = 1; r <= half; ++r) {
        // Fixed team n meets team r; it hosts in odd rounds.
        int fixed_opp = r;
        if (r % 2 == 1) {
            s.at(n, r) = fixed_opp;
            s.at(fixed_opp, r) = -n;
        } else {
            s.at(n, r) = -fixed_opp;
            s.at(fixed_opp, r) = n;
        }
        // Rotating teams 1..n-1 pair symmetrically around position r-1.
        for (int k = 1; k <= (n - 2) / 2; ++k) {
            int a = (r - 1 + k) % half + 1;
            int b = ((r - 1 - k) % half + half) % half + 1;
            s.at(a, r) = b;
            s.at(b, r) = -a;
        }
    }
    for (int t = 1; t <= n; ++t)
        for (int r = 1; r <= half; ++r)
            s.at(t, r + half) = -s.at(t, r);
    return s;
}

Schedule initial_schedule(const Instance& inst, std::mt19937_64& rng, int burn_in) {
    Schedule s = canonical_schedule(inst.n());
    for (int b = 0; b < burn_in; ++b)
        s = select_random_neighbor(s, rng);
    return s;
}

SampledMove sample_move(const Schedule& s, std::mt19937_64& rng) {
    const int n = s.n();
    const int half = n - 1;
    auto pick = [&rng](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    // Kind is drawn once, uniformly; only the parameter tuple is resampled,
    // so every kind keeps frequency 1/5.
    const auto kind = static_cast<MoveKind>(pick(0, 4));
    for (int attempt = 0; attempt < 100; ++attempt) {
        switch (kind) {
            case MoveKind::SwapTeams:
            case MoveKind::SwapHomes: {
                int i = pick(1, n), j = pick(1, n);
                if (i == j) continue;
                return {kind, i, j, 0};
            }
            case MoveKind::SwapRounds: {
                int r1 = pick(1, half), r2 = pick(1, half);
                if (r1 == r2) continue;
                return {kind, r1, r2, 0};
            }
            case MoveKind::PartialSwapRounds: {
                int t = pick(1, n);
                int r1 = pick(1, half), r2 = pick(1, half);
                if (r1 == r2) continue;
                return {kind, r1, r2, t};
            }
            case MoveKind::PartialSwapTeams: {
                int i = pick(1, n), j = pick(1, n);
                int r = pick(1, half);
                if (i == j || std::abs(s.at(i, r)) == j) continue;
                return {kind, i, j, r};
            }
        }
    }
    throw std::logic_error("no valid neighbor after 100 attempts; move sampling is broken");
}

Schedule apply_move(const Schedule& s, const SampledMove& m) {
    switch (m.kind) {
        case MoveKind::SwapTeams: return swap_teams(s, m.a, m.b);
        case MoveKind::SwapRounds: return swap_rounds(s, m.a, m.b);
        case MoveKind::SwapHomes: return swap_homes(s, m.a, m.b);
        case MoveKind::PartialSwapRounds: return partial_swap_rounds(s, m.c, m.a, m.b);
        case MoveKind::PartialSwapTeams: return partial_swap_teams(s, m.a, m.b, m.c);
    }
    throw std::logic_error("unknown move kind");
}

Schedule select_random_neighbor(const Schedule& s, std::mt19937_64& rng) {
    return apply_move(s, sample_move(s, rng));
}

}  // namespace mttp
