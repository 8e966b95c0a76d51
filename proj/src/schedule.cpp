#include "mttp/schedule.hpp"

#include <cstdlib>
#include <sstream>

namespace mttp {

Schedule::Schedule(int n, std::vector<int> opp) : n_(n), opp_(std::move(opp)) {
    if (n_ < 4 || n_ % 2 != 0)
        throw DomainError("schedule needs even n >= 4, got " + std::to_string(n_));
    if (opp_.size() != static_cast<size_t>(n_) * rounds())
        throw ValidationError("opponent table has " + std::to_string(opp_.size()) +
                              " cells, expected " + std::to_string(n_ * rounds()));
    for (int v : opp_) {
        if (v == 0 || std::abs(v) > n_)
            throw ValidationError("opponent entry " + std::to_string(v) + " out of range");
    }
}

bool is_valid_structure(const Schedule& s) {
    const int n = s.n();
    const int rounds = s.rounds();
    for (int t = 1; t <= n; ++t) {
        for (int r = 1; r <= rounds; ++r) {
            int v = s.at(t, r);
            int j = std::abs(v);
            if (j == t) return false;
            int back = s.at(j, r);
            if (back != (v > 0 ? -t : t)) return false;  // consistency
        }
    }
    // Each half is a single round robin; over both halves every opponent is
    // met once home and once away.
    const int half = n - 1;
    for (int t = 1; t <= n; ++t) {
        std::vector<int> first(n + 1, 0), home(n + 1, 0), away(n + 1, 0);
        for (int r = 1; r <= rounds; ++r) {
            int v = s.at(t, r);
            int j = std::abs(v);
            if (r <= half) ++first[j];
            (v > 0 ? home[j] : away[j])++;
        }
        for (int j = 1; j <= n; ++j) {
            if (j == t) continue;
            if (first[j] != 1 || home[j] != 1 || away[j] != 1) return false;
        }
    }
    return true;
}

bool is_mirrored(const Schedule& s) {
    const int half = s.n() - 1;
    for (int t = 1; t <= s.n(); ++t)
        for (int r = 1; r <= half; ++r)
            if (s.at(t, r + half) != -s.at(t, r)) return false;
    return true;
}

bool atmost_satisfied(const Schedule& s, int k) {
    for (int t = 1; t <= s.n(); ++t) {
        int run = 0;
        bool prev_home = false;
        for (int r = 1; r <= s.rounds(); ++r) {
            bool home = s.at(t, r) > 0;
            run = (r > 1 && home == prev_home) ? run + 1 : 1;
            if (run > k) return false;
            prev_home = home;
        }
    }
    return true;
}

Feasibility check_schedule(const Schedule& s, const Instance& inst) {
    Feasibility f;
    const int n = s.n();
    const int rounds = s.rounds();
    const int half = n - 1;

    f.structure_ok = true;
    for (int t = 1; t <= n; ++t) {
        std::vector<int> first(n + 1, 0), home(n + 1, 0), away(n + 1, 0);
        for (int r = 1; r <= rounds; ++r) {
            int v = s.at(t, r);
            int j = std::abs(v);
            if (j == t) {
                f.structure_ok = false;
                f.violations.push_back({t, r, "team plays itself"});
                continue;
            }
            if (s.at(j, r) != (v > 0 ? -t : t)) {
                f.structure_ok = false;
                f.violations.push_back({t, r, "inconsistent pairing with team " + std::to_string(j)});
            }
            if (r <= half) ++first[j];
            (v > 0 ? home[j] : away[j])++;
        }
        for (int j = 1; j <= n; ++j) {
            if (j == t) continue;
            if (first[j] != 1) {
                f.structure_ok = false;
                f.violations.push_back(
                    {t, 0, "meets team " + std::to_string(j) + " " + std::to_string(first[j]) +
                               " times in the first half"});
            }
            if (home[j] != 1 || away[j] != 1) {
                f.structure_ok = false;
                f.violations.push_back(
                    {t, 0, "home/away split vs team " + std::to_string(j) + " is " +
                               std::to_string(home[j]) + "/" + std::to_string(away[j])});
            }
        }
    }

    f.mirror_ok = true;
    for (int t = 1; t <= n; ++t) {
        for (int r = 1; r <= half; ++r) {
            if (s.at(t, r + half) != -s.at(t, r)) {
                f.mirror_ok = false;
                f.violations.push_back({t, r + half, "round does not mirror round " + std::to_string(r)});
            }
        }
    }

    f.atmost_ok = true;
    for (int t = 1; t <= n; ++t) {
        int run = 0;
        bool prev_home = false;
        for (int r = 1; r <= rounds; ++r) {
            bool home = s.at(t, r) > 0;
            run = (r > 1 && home == prev_home) ? run + 1 : 1;
            if (run == inst.k() + 1) {  // report each over-long run once
                f.atmost_ok = false;
                f.violations.push_back(
                    {t, r, std::string(home ? "home" : "away") + " run exceeds " +
                               std::to_string(inst.k())});
            }
            prev_home = home;
        }
    }
    return f;
}

long long team_itinerary_distance(const Schedule& s, const Instance& inst, int t) {
    long long total = 0;
    int pos = t;  // current venue, starting at home
    for (int r = 1; r <= s.rounds(); ++r) {
        int v = s.at(t, r);
        int venue = v > 0 ? t : -v;
        total += inst.dist(pos, venue);
        pos = venue;
    }
    total += inst.dist(pos, t);
    return total;
}

long long travel_distance(const Schedule& s, const Instance& inst) {
    long long total = 0;
    for (int t = 1; t <= s.n(); ++t)
        total += team_itinerary_distance(s, inst, t);
    return total;
}

std::string render_schedule(const Schedule& s) {
    std::ostringstream out;
    for (int t = 1; t <= s.n(); ++t) {
        for (int r = 1; r <= s.rounds(); ++r)
            out << s.at(t, r) << (r == s.rounds() ? '\n' : ' ');
    }
    return out.str();
}

Schedule parse_schedule(std::istream& in) {
    std::vector<std::vector<int>> lines;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<int> row;
        std::string tok;
        while (ls >> tok) {
            char* end = nullptr;
            long v = std::strtol(tok.c_str(), &end, 10);
            if (end == tok.c_str() || *end != '\0')
                throw ParseError("line " + std::to_string(lineno) + ", column " +
                                 std::to_string(row.size() + 1) + ": malformed token '" + tok + "'");
            row.push_back(static_cast<int>(v));
        }
        if (!row.empty()) lines.push_back(std::move(row));
    }
    if (lines.empty()) throw ParseError("empty schedule file");

    const size_t cols = lines[0].size();
    if (cols % 2 != 0 || cols < 6)
        throw ParseError("line 1: " + std::to_string(cols) +
                         " columns cannot form 2(n-1) rounds");
    const int n = static_cast<int>(cols) / 2 + 1;
    if (lines.size() != static_cast<size_t>(n))
        throw ParseError("expected " + std::to_string(n) + " team lines for " +
                         std::to_string(cols) + " rounds, got " + std::to_string(lines.size()));
    std::vector<int> opp;
    opp.reserve(static_cast<size_t>(n) * cols);
    for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].size() != cols)
            throw ParseError("line " + std::to_string(i + 1) + ": expected " +
                             std::to_string(cols) + " columns, got " +
                             std::to_string(lines[i].size()));
        opp.insert(opp.end(), lines[i].begin(), lines[i].end());
    }
    return Schedule(n, std::move(opp));
}

}  // namespace mttp
