// Acceptance suite: one pass/fail line per criterion, exit nonzero on any
// failure. argv[1] is the path to the mttp CLI binary.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "mttp/oracle.hpp"
#include "mttp/parallel.hpp"

using namespace mttp;
using nlohmann::json;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::string cli_path;

int run_cli(const std::string& args, const std::string& stdout_file = "") {
    std::string cmd = cli_path + " " + args;
    if (!stdout_file.empty()) cmd += " > " + stdout_file;
    int rc = std::system(cmd.c_str());
    return rc;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// --- criterion 1: move closure over 10,000 cases per move per n -----------

void criterion1() {
    std::mt19937_64 rng(1001);
    const int cases = 10000;
    bool ok = true;
    std::string detail;
    for (int n : {4, 6, 8}) {
        Instance inst = make_circular_instance(n);
        Schedule s = initial_schedule(inst, rng, 30);
        auto pick = [&](int lo, int hi) {
            return std::uniform_int_distribution<int>(lo, hi)(rng);
        };
        for (int kind = 0; kind < 5 && ok; ++kind) {
            for (int c = 0; c < cases; ++c) {
                Schedule m;
                switch (static_cast<MoveKind>(kind)) {
                    case MoveKind::SwapTeams: {
                        int i = pick(1, n), j = pick(1, n - 1);
                        if (j >= i) ++j;
                        m = swap_teams(s, i, j);
                        break;
                    }
                    case MoveKind::SwapRounds: {
                        int r1 = pick(1, n - 1), r2 = pick(1, n - 2);
                        if (r2 >= r1) ++r2;
                        m = swap_rounds(s, r1, r2);
                        break;
                    }
                    case MoveKind::SwapHomes: {
                        int i = pick(1, n), j = pick(1, n - 1);
                        if (j >= i) ++j;
                        m = swap_homes(s, i, j);
                        break;
                    }
                    case MoveKind::PartialSwapRounds: {
                        int t = pick(1, n);
                        int r1 = pick(1, n - 1), r2 = pick(1, n - 2);
                        if (r2 >= r1) ++r2;
                        m = partial_swap_rounds(s, t, r1, r2);
                        break;
                    }
                    case MoveKind::PartialSwapTeams: {
                        int i = pick(1, n), j = pick(1, n - 1), r = pick(1, n - 1);
                        if (j >= i) ++j;
                        if (std::abs(s.at(i, r)) == j) continue;  // undefined tuple
                        m = partial_swap_teams(s, i, j, r);
                        break;
                    }
                }
                if (!is_valid_structure(m) || !is_mirrored(m)) {
                    ok = false;
                    detail = "closure broken at n=" + std::to_string(n) + " kind " +
                             std::to_string(kind);
                    break;
                }
                s = std::move(m);
            }
        }
    }
    report(1, "move closure, 10,000 cases per move at n in {4,6,8}", ok, detail);
}

// --- criterion 2: distance oracle equivalence ------------------------------

void criterion2() {
    std::mt19937_64 rng(2002);
    bool ok = true;
    for (int n : {4, 6, 8}) {
        Instance inst = make_circular_instance(n);
        Schedule s = initial_schedule(inst, rng, 30);
        for (int c = 0; c < 1000; ++c) {
            if (travel_distance(s, inst) != oracle_total_distance(s, inst)) {
                ok = false;
                break;
            }
            s = select_random_neighbor(s, rng);
        }
    }
    report(2, "distance equals independent oracle on 1,000 random schedules per n", ok);
}

// --- criterion 3: exhaustive optimality on CIRC4 ---------------------------

void criterion3() {
    Instance inst = make_circular_instance(4);
    EnumerationReport oracle = enumerate_feasible(inst);
    if (!oracle.optimum_schedule) {
        report(3, "PSA(4) reaches the exhaustive CIRC4 optimum", false, "oracle found nothing");
        return;
    }
    RunConfig cfg;
    cfg.threads = 4;
    cfg.sa.n_iterations = 10;
    cfg.sa.seed = 1;
    PsaOutcome seed1 = run_psa(inst, cfg);
    bool seed1_ok = seed1.stats.best_replica >= 0 && seed1.stats.best_dist == oracle.optimum_distance;

    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        cfg.sa.seed = seed;
        PsaOutcome out = run_psa(inst, cfg);
        if (out.stats.best_replica >= 0 && out.stats.best_dist == oracle.optimum_distance) ++hits;
    }
    report(3, "PSA(4) reaches the exhaustive CIRC4 optimum", seed1_ok && hits >= 95,
           "optimum " + std::to_string(oracle.optimum_distance) + ", seed 1 " +
               (seed1_ok ? "hit" : "miss") + ", " + std::to_string(hits) + "/100 seeds");
}

// --- criterion 4: cmd_solve determinism ------------------------------------

void criterion4() {
    const std::string flags =
        "solve --circ 4 --threads 4 --seed 1 --iterations 10 ";
    int rc1 = run_cli(flags + "--out acc4_a.txt --metrics acc4_a.json", "acc4_a.out");
    int rc2 = run_cli(flags + "--out acc4_b.txt --metrics acc4_b.json", "acc4_b.out");
    bool ok = rc1 == 0 && rc2 == 0;
    std::string detail;
    if (ok) {
        std::string sched_a = slurp("acc4_a.txt"), sched_b = slurp("acc4_b.txt");
        ok = !sched_a.empty() && sched_a == sched_b && slurp("acc4_a.out") == slurp("acc4_b.out");
        json ma = json::parse(slurp("acc4_a.json"));
        json mb = json::parse(slurp("acc4_b.json"));
        ok = ok && ma["best_distance"] == mb["best_distance"] &&
             ma["total_solutions_explored"] == mb["total_solutions_explored"];
        detail = "best_distance " + ma["best_distance"].dump();
    } else {
        detail = "cli exit codes " + std::to_string(rc1) + ", " + std::to_string(rc2);
    }
    report(4, "cmd_solve is reproducible flag-for-flag", ok, detail);
}

// --- criterion 5: evaluation accounting ------------------------------------

void criterion5() {
    Instance inst = make_circular_instance(4);
    RunConfig cfg;
    cfg.threads = 4;
    cfg.sa.n_iterations = 10;
    cfg.sa.seed = 7;
    const std::uint64_t per_replica =
        static_cast<std::uint64_t>(cfg.sa.n_iterations) *
        static_cast<std::uint64_t>(
            std::ceil(std::log(cfg.sa.t_final / cfg.sa.t_initial) / std::log(cfg.sa.alpha)));
    PsaOutcome out = run_psa(inst, cfg);
    bool ok = true;
    for (const AnnealResult& r : out.stats.per_replica)
        ok = ok && r.solutions_explored == per_replica;
    ok = ok && out.stats.total_solutions_explored == 4 * per_replica;
    report(5, "solutions_explored matches the closed-form sweep count", ok,
           std::to_string(per_replica) + " per replica");
}

// --- criterion 6: acceptance-rule statistics --------------------------------

void criterion6() {
    std::mt19937_64 rng(6006);
    const int draws = 10000;
    bool ok = true;
    std::ostringstream detail;
    for (auto [delta, temp] : std::vector<std::pair<long long, double>>{
             {10, 10.0}, {20, 10.0}, {5, 50.0}}) {
        int taken = 0;
        for (int i = 0; i < draws; ++i) taken += accept(delta, temp, rng);
        double p = std::exp(-static_cast<double>(delta) / temp);
        double se = std::sqrt(p * (1.0 - p) / draws);
        double freq = static_cast<double>(taken) / draws;
        bool within = std::abs(freq - p) <= 3.0 * se;
        ok = ok && within;
        detail << "(" << delta << "," << temp << "): " << freq << " vs " << p << "; ";
    }
    report(6, "empirical acceptance frequency within 3 SE of exp(-delta/T)", ok, detail.str());
}

// --- criterion 7: throughput scaling ----------------------------------------

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

void criterion7() {
    int rc = run_cli(
        "bench --circ 8 --threads-list 1,2,4 --repeats 5 --iterations 20 --csv acc7.csv",
        "acc7.out");
    if (rc != 0) {
        report(7, "throughput scaling on CIRC8", false, "bench exit code " + std::to_string(rc));
        return;
    }
    std::ifstream csv("acc7.csv");
    std::string line;
    std::getline(csv, line);  // header
    std::vector<double> t1, t2, t4;
    while (std::getline(csv, line)) {
        std::stringstream ls(line);
        std::string threads, rep, sps;
        std::getline(ls, threads, ',');
        std::getline(ls, rep, ',');
        std::getline(ls, sps, ',');
        double v = std::stod(sps);
        if (threads == "1") t1.push_back(v);
        if (threads == "2") t2.push_back(v);
        if (threads == "4") t4.push_back(v);
    }
    if (t1.size() != 5 || t2.size() != 5 || t4.size() != 5) {
        report(7, "throughput scaling on CIRC8", false, "missing bench samples");
        return;
    }
    double m1 = median(t1), m2 = median(t2), m4 = median(t4);
    std::ostringstream detail;
    detail << "median sol/s " << m1 << " / " << m2 << " / " << m4 << "; speedup " << m2 / m1
           << "x at T=2, " << m4 / m1 << "x at T=4";

    unsigned cores = std::thread::hardware_concurrency();
    if (cores < 4) {
        // The hardware precondition (>= 4 physical cores) does not hold here;
        // the scaling gate is reported informationally instead of asserted.
        detail << "; monotonicity gate skipped, only " << cores << " core(s)";
        report(7, "throughput scaling on CIRC8 (informational)", true, detail.str());
        return;
    }
    bool monotone = m2 > m1 && m4 > m2;
    report(7, "throughput scaling on CIRC8 (hard gate: monotone medians)", monotone, detail.str());
}

// --- criterion 8: best-distance monotonicity --------------------------------

void criterion8() {
    Instance inst = make_circular_instance(6);
    SAConfig cfg;
    cfg.n_iterations = 5;
    cfg.seed = 8;
    bool ok = true;
    std::vector<long long> bests;
    AnnealObserver obs;
    obs.on_best_update = [&](const Schedule& s, long long d) {
        if (!check_schedule(s, inst).feasible() || travel_distance(s, inst) != d) ok = false;
        if (!bests.empty() && d >= bests.back()) ok = false;
        bests.push_back(d);
    };
    anneal_seeded(inst, cfg, &obs);
    ok = ok && !bests.empty();
    report(8, "recorded best sequence strictly decreasing, every entry feasible", ok,
           std::to_string(bests.size()) + " updates");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-mttp-cli>\n";
        return 2;
    }
    cli_path = argv[1];

    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
