#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mttp/oracle.hpp"
#include "mttp/parallel.hpp"

namespace {

using nlohmann::json;

struct InstanceFlags {
    std::string path;
    int circ_n = 0;
    int k = 3;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& f) {
    auto* path = cmd->add_option("--instance", f.path, "instance file (n header + row-major matrix)");
    auto* circ = cmd->add_option("--circ", f.circ_n, "generate a circular instance with N teams");
    path->excludes(circ);
    cmd->add_option("--k", f.k, "max consecutive home or away games")->default_val(3);
}

mttp::Instance load_instance(const InstanceFlags& f) {
    if (!f.path.empty()) return mttp::parse_instance_file(f.path, f.k);
    if (f.circ_n > 0) return mttp::make_circular_instance(f.circ_n, f.k);
    throw CLI::ValidationError("one of --instance or --circ is required");
}

void add_sa_flags(CLI::App* cmd, mttp::SAConfig& sa) {
    cmd->add_option("--t-initial", sa.t_initial, "starting temperature")->default_val(400.0);
    cmd->add_option("--t-final", sa.t_final, "final temperature per sweep")->default_val(1.0);
    cmd->add_option("--alpha", sa.alpha, "geometric cooling factor")->default_val(0.99);
    cmd->add_option("--iterations", sa.n_iterations, "outer reheating iterations")->default_val(100);
    cmd->add_option("--burn-in", sa.burn_in, "initial randomization moves (-1 = 20*n)")->default_val(-1);
    cmd->add_option("--seed", sa.seed, "random seed")->default_val(0);
}

json metrics_json(const mttp::Instance& inst, const mttp::RunStats& stats) {
    json per = json::array();
    for (const auto& r : stats.per_replica) {
        per.push_back({{"best_dist", r.best_schedule ? json(r.best_dist) : json(nullptr)},
                       {"feasible", r.best_schedule.has_value()},
                       {"solutions_explored", r.solutions_explored},
                       {"accepted", r.accepted},
                       {"elapsed_seconds", r.elapsed_seconds}});
    }
    return json{{"instance", inst.name()},
                {"threads", stats.threads},
                {"seed", stats.sa.seed},
                {"config",
                 {{"t_initial", stats.sa.t_initial},
                  {"t_final", stats.sa.t_final},
                  {"alpha", stats.sa.alpha},
                  {"n_iterations", stats.sa.n_iterations},
                  {"burn_in", stats.sa.burn_in}}},
                {"best_distance", stats.best_replica >= 0 ? json(stats.best_dist) : json(nullptr)},
                {"feasible", stats.best_replica >= 0},
                {"best_replica", stats.best_replica},
                {"total_solutions_explored", stats.total_solutions_explored},
                {"wall_elapsed_seconds", stats.wall_elapsed_seconds},
                {"solutions_per_second", stats.solutions_per_second},
                {"per_replica", per}};
}

int cmd_solve(const InstanceFlags& inst_flags, const mttp::SAConfig& sa, int threads,
              const std::string& out_path, const std::string& metrics_path) {
    mttp::Instance inst = load_instance(inst_flags);
    mttp::RunConfig cfg{threads, sa};
    mttp::PsaOutcome outcome = mttp::run_psa(inst, cfg);

    if (!metrics_path.empty()) {
        std::ofstream mf(metrics_path);
        mf << metrics_json(inst, outcome.stats).dump(2) << '\n';
    }
    if (outcome.stats.best_replica < 0) {
        std::cerr << "no feasible schedule found\n";
        return 2;
    }
    if (!out_path.empty()) {
        std::ofstream of(out_path);
        of << mttp::render_schedule(*outcome.best.best_schedule);
    }
    std::cout << outcome.best.best_dist << '\n';
    return 0;
}

int cmd_validate(const InstanceFlags& inst_flags, const std::string& schedule_path) {
    mttp::Instance inst = load_instance(inst_flags);
    std::ifstream sf(schedule_path);
    if (!sf) throw mttp::ParseError("cannot open schedule file: " + schedule_path);
    mttp::Schedule s = mttp::parse_schedule(sf);
    if (s.n() != inst.n())
        throw mttp::ValidationError("schedule has " + std::to_string(s.n()) +
                                    " teams, instance has " + std::to_string(inst.n()));

    mttp::Feasibility f = mttp::check_schedule(s, inst);
    for (const auto& v : f.violations)
        std::cout << "violation: team " << v.team << ", round " << v.round << ": " << v.what << '\n';
    std::cout << (f.feasible() ? "feasible" : "infeasible") << ", distance "
              << mttp::travel_distance(s, inst) << '\n';
    return f.feasible() ? 0 : 3;
}

int cmd_bench(const InstanceFlags& inst_flags, const mttp::SAConfig& sa,
              const std::string& threads_list, int repeats, const std::string& csv_path) {
    std::vector<int> thread_counts;
    std::stringstream ts(threads_list);
    for (std::string tok; std::getline(ts, tok, ',');) thread_counts.push_back(std::stoi(tok));
    if (std::find(thread_counts.begin(), thread_counts.end(), 1) == thread_counts.end())
        throw CLI::ValidationError("--threads-list must contain 1 (the speedup baseline)");

    mttp::Instance inst = load_instance(inst_flags);

    std::ofstream csv;
    if (!csv_path.empty()) {
        csv.open(csv_path);
        csv << "threads,repeat,solutions_per_second,best_distance\n";
    }

    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        size_t m = v.size() / 2;
        return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
    };

    std::vector<double> medians;
    std::cout << "threads  median_sol_per_sec  speedup\n";
    double baseline = 0.0;
    for (int t : thread_counts) {
        std::vector<double> throughputs;
        for (int rep = 0; rep < repeats; ++rep) {
            mttp::RunConfig cfg{t, sa};
            cfg.sa.seed = sa.seed + static_cast<std::uint64_t>(rep);
            mttp::PsaOutcome outcome = mttp::run_psa(inst, cfg);
            throughputs.push_back(outcome.stats.solutions_per_second);
            if (csv.is_open())
                csv << t << ',' << rep << ',' << outcome.stats.solutions_per_second << ','
                    << (outcome.stats.best_replica >= 0 ? std::to_string(outcome.stats.best_dist)
                                                        : std::string("NA"))
                    << '\n';
        }
        double med = median(throughputs);
        if (t == 1) baseline = med;
        medians.push_back(med);
        std::cout << t << "  " << med << "  " << (baseline > 0 ? med / baseline : 0.0) << '\n';
    }
    return 0;
}

int cmd_oracle(const InstanceFlags& inst_flags) {
    mttp::Instance inst = load_instance(inst_flags);
    mttp::EnumerationReport report = mttp::enumerate_feasible(inst);
    std::cout << "n " << report.n << "\nk " << report.k << "\ncount_feasible "
              << report.count_feasible << '\n';
    if (report.optimum_schedule) {
        std::cout << "optimum_distance " << report.optimum_distance << "\noptimum_schedule\n"
                  << mttp::render_schedule(*report.optimum_schedule);
    } else {
        std::cout << "optimum_distance none\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mirrored traveling tournament solver (parallel simulated annealing)"};
    app.require_subcommand(1);

    InstanceFlags inst_flags;
    mttp::SAConfig sa;
    int threads = 1;
    std::string out_path, metrics_path, schedule_path, threads_list = "1";
    int repeats = 5;
    std::string csv_path;

    auto* solve = app.add_subcommand("solve", "run PSA(T) and write the best schedule");
    add_instance_flags(solve, inst_flags);
    add_sa_flags(solve, sa);
    solve->add_option("--threads", threads, "replica/thread count T")->default_val(1);
    solve->add_option("--out", out_path, "schedule output file");
    solve->add_option("--metrics", metrics_path, "metrics JSON output file");

    auto* validate = app.add_subcommand("validate", "check a schedule file against an instance");
    add_instance_flags(validate, inst_flags);
    validate->add_option("--schedule", schedule_path, "schedule file")->required();

    auto* bench = app.add_subcommand("bench", "throughput scaling across thread counts");
    add_instance_flags(bench, inst_flags);
    add_sa_flags(bench, sa);
    bench->add_option("--threads-list", threads_list, "comma-separated thread counts, must include 1")
        ->default_val("1");
    bench->add_option("--repeats", repeats, "repetitions per thread count")->default_val(5);
    bench->add_option("--csv", csv_path, "raw samples output file (CSV)");

    auto* oracle = app.add_subcommand("oracle", "exhaustive enumeration report for tiny instances");
    oracle->group("");  // test-constant generator, not part of the advertised surface
    add_instance_flags(oracle, inst_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(inst_flags, sa, threads, out_path, metrics_path);
        if (validate->parsed()) return cmd_validate(inst_flags, schedule_path);
        if (bench->parsed()) return cmd_bench(inst_flags, sa, threads_list, repeats, csv_path);
        if (oracle->parsed()) return cmd_oracle(inst_flags);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
