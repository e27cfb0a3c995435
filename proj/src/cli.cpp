#include "mtsp/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mtsp/allocator.hpp"
#include "mtsp/bench.hpp"
#include "mtsp/error.hpp"
#include "mtsp/ga.hpp"
#include "mtsp/instance.hpp"
#include "mtsp/solution_io.hpp"
#include "mtsp/svg.hpp"

namespace mtsp {

namespace {

namespace fs = std::filesystem;

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << text;
}

const std::string& ensure_parent(const std::string& path) {
    const fs::path parent = fs::path(path).parent_path();
    if (!parent.empty()) fs::create_directories(parent);
    return path;
}

void write_plots(const Instance& inst, const Solution& sol, const fs::path& dir) {
    fs::create_directories(dir);
    write_text(dir / "routes.svg", render_routes_svg(inst, sol));
    write_text(dir / "convergence.svg", render_convergence_svg(sol.trace));
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cluster-then-route multi-agent task allocation (MTSP) solver and benchmark harness"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a uniform random instance");
    std::size_t gen_k = 5, gen_n = 20;
    std::uint64_t gen_seed = 42;
    std::string gen_region = "0,0,10,10", gen_out;
    gen->add_option("--k", gen_k, "Number of agents")->required();
    gen->add_option("--n", gen_n, "Number of tasks")->required();
    gen->add_option("--seed", gen_seed, "Generator seed");
    gen->add_option("--region", gen_region, "Sampling box xmin,ymin,xmax,ymax");
    gen->add_option("--out", gen_out, "Output file (stdout when omitted)");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
    std::string in_path, method = "proposed", sol_out, plots_dir, init = "nearest";
    SolverConfig scfg;
    GaConfig gcfg;
    std::optional<double> budget;
    bool no_timing = false;
    solve_cmd->add_option("--in", in_path, "Instance JSON")->required();
    solve_cmd->add_option("--method", method, "proposed | ga")->check(CLI::IsMember({"proposed", "ga"}));
    solve_cmd->add_option("--out", sol_out, "Solution JSON (stdout when omitted)");
    solve_cmd->add_option("--plots", plots_dir, "Directory for routes.svg and convergence.svg");
    solve_cmd->add_option("--init", init, "Initial assignment: nearest | kmeans")
        ->check(CLI::IsMember({"nearest", "kmeans"}));
    solve_cmd->add_option("--M", scfg.neighborhood_size, "Candidate depots per task")->check(CLI::PositiveNumber);
    solve_cmd->add_flag("--allow-empty-clusters", scfg.allow_empty_clusters, "Let migrations empty a cluster");
    solve_cmd->add_option("--shuffle-seed", scfg.shuffle_seed, "Seed for the task visit order");
    solve_cmd->add_option("--max-iters", scfg.max_outer_iterations, "Outer iteration cap")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--pop", gcfg.population, "GA population size");
    solve_cmd->add_option("--gens", gcfg.generations, "GA generation cap");
    solve_cmd->add_option("--mutation", gcfg.mutation_rate, "GA per-gene mutation probability");
    solve_cmd->add_option("--seed", gcfg.seed, "GA seed");
    solve_cmd->add_option("--tournament", gcfg.tournament_size, "GA tournament size");
    solve_cmd->add_option("--elitism", gcfg.elitism, "GA elite survivors per generation");
    solve_cmd->add_option("--budget", budget, "Wall-clock budget in seconds");
    solve_cmd->add_flag("--no-timing", no_timing, "Write elapsed_s as 0 for reproducible output");

    // bench
    auto* bench = app.add_subcommand("bench", "Run a scenario x method x seed matrix and write CSV");
    BenchOptions bopt;
    std::string scenarios = "5x20,10x50,100x500,1000x5000", methods = "proposed,ga", bench_region = "0,0,10,10",
                bench_out;
    std::size_t ga_pop = 0;
    int ga_gens = 0;
    bench->add_option("--scenarios", scenarios, "Comma-separated KxN list");
    bench->add_option("--methods", methods, "Comma-separated subset of proposed,ga");
    bench->add_option("--budget", bopt.budget_s, "Per-run wall-clock budget in seconds");
    bench->add_option("--seeds", bopt.seeds, "Seeds per scenario")->check(CLI::PositiveNumber);
    bench->add_option("--first-seed", bopt.first_seed, "First seed; seeds run consecutively");
    bench->add_option("--region", bench_region, "Sampling box xmin,ymin,xmax,ymax");
    bench->add_option("--M", bopt.proposed.neighborhood_size, "Candidate depots per task")
        ->check(CLI::PositiveNumber);
    bench->add_option("--pop", ga_pop, "Override the GA population size");
    bench->add_option("--gens", ga_gens, "Override the GA generation cap");
    bench->add_option("--jobs", bopt.jobs, "Runs executed in parallel")->check(CLI::PositiveNumber);
    bench->add_option("--out", bench_out, "CSV file (stdout when omitted)");

    // plot
    auto* plot = app.add_subcommand("plot", "Render SVG figures for a solution");
    std::string plot_inst, plot_sol, plot_out = ".";
    plot->add_option("--in", plot_inst, "Instance JSON")->required();
    plot->add_option("--solution", plot_sol, "Solution JSON")->required();
    plot->add_option("--out", plot_out, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*gen) {
            const Instance inst = generate_instance(gen_k, gen_n, parse_region(gen_region), gen_seed);
            if (gen_out.empty())
                write_instance(inst, out);
            else
                save_instance(inst, ensure_parent(gen_out));
        } else if (*solve_cmd) {
            const Instance inst = load_instance(in_path);
            Solution sol;
            if (method == "proposed") {
                scfg.init = init == "kmeans" ? InitMethod::KMeans : InitMethod::Nearest;
                scfg.time_budget_s = budget;
                sol = solve(inst, scfg);
            } else {
                gcfg.time_budget_s = budget;
                sol = ga_solve(inst, gcfg);
            }
            const SolutionJsonOptions jopt{!no_timing};
            if (sol_out.empty())
                write_solution(sol, out, jopt);
            else
                save_solution(sol, ensure_parent(sol_out), jopt);
            if (!plots_dir.empty()) write_plots(inst, sol, plots_dir);
            err << sol.method << ": max_cost " << sol.max_cost << ", total_cost " << sol.total_cost << ", "
                << sol.iterations << " iterations, " << sol.elapsed_s << " s" << (sol.timed_out ? " (timeout)" : "")
                << '\n';
        } else if (*bench) {
            bopt.scenarios = parse_scenarios(scenarios);
            bopt.methods.clear();
            std::stringstream ss(methods);
            for (std::string m; std::getline(ss, m, ',');) bopt.methods.push_back(m);
            bopt.region = parse_region(bench_region);
            if (ga_pop > 0) bopt.ga_population = ga_pop;
            if (ga_gens > 0) bopt.ga_generations = ga_gens;
            const auto rows = run_bench(bopt);
            if (bench_out.empty()) {
                write_csv(rows, out);
            } else {
                std::ofstream csv(ensure_parent(bench_out), std::ios::binary);
                if (!csv) throw InputError("cannot write '" + bench_out + "'");
                write_csv(rows, csv);
            }
        } else if (*plot) {
            write_plots(load_instance(plot_inst), load_solution(plot_sol), plot_out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace mtsp
