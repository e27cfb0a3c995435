#include "mtsp/bench.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <ostream>
#include <sstream>
#include <thread>

#include "mtsp/error.hpp"

namespace mtsp {

namespace {

std::string exact(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::size_t parse_count(const std::string& text, const std::string& whole) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used);
        if (used != text.size() || v == 0) throw InputError("");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw InputError("scenario list '" + whole + "' must look like 5x20,10x50");
    }
}

}  // namespace

std::vector<Scenario> parse_scenarios(const std::string& text) {
    std::vector<Scenario> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto x = item.find('x');
        if (x == std::string::npos) throw InputError("scenario list '" + text + "' must look like 5x20,10x50");
        out.push_back({parse_count(item.substr(0, x), text), parse_count(item.substr(x + 1), text)});
    }
    if (out.empty()) throw InputError("scenario list is empty");
    return out;
}

std::vector<Scenario> default_scenarios() { return {{5, 20}, {10, 50}, {100, 500}, {1000, 5000}}; }

GaConfig ga_defaults_for(const Scenario& s) {
    GaConfig cfg;
    cfg.mutation_rate = 0.05;
    if (s.n <= 20) {
        cfg.population = 80;
        cfg.generations = 100;
    } else if (s.n <= 50) {
        cfg.population = 80;
        cfg.generations = 1000;
    } else {
        cfg.population = 40;
        cfg.generations = 1000;
    }
    return cfg;
}

const char* to_string(RowStatus s) {
    switch (s) {
        case RowStatus::Ok: return "ok";
        case RowStatus::Timeout: return "timeout";
        case RowStatus::Infeasible: return "infeasible";
    }
    return "?";
}

BenchmarkRow run_cell(const Scenario& scenario, const std::string& method, std::uint64_t seed,
                      const BenchOptions& options) {
    BenchmarkRow row;
    row.scenario = scenario;
    row.region = options.region;
    row.seed = seed;
    row.method = method;

    const Instance inst = generate_instance(scenario.k, scenario.n, options.region, seed);
    Solution sol;
    try {
        if (method == "proposed") {
            SolverConfig cfg = options.proposed;
            cfg.shuffle_seed = seed;
            cfg.time_budget_s = options.budget_s;
            sol = solve(inst, cfg);
        } else if (method == "ga") {
            GaConfig cfg = ga_defaults_for(scenario);
            if (options.ga_population) cfg.population = *options.ga_population;
            if (options.ga_generations) cfg.generations = *options.ga_generations;
            if (options.ga_mutation) cfg.mutation_rate = *options.ga_mutation;
            cfg.seed = seed;
            cfg.time_budget_s = options.budget_s;
            sol = ga_solve(inst, cfg);
        } else {
            throw InputError("unknown method '" + method + "'");
        }
    } catch (const InfeasibleError&) {
        row.status = RowStatus::Infeasible;
        return row;
    }

    row.status = sol.timed_out ? RowStatus::Timeout : RowStatus::Ok;
    row.max_cost = sol.max_cost;
    row.total_cost = sol.total_cost;
    row.elapsed_s = sol.elapsed_s;
    row.iterations = sol.iterations;
    row.evaluation_calls = sol.evaluation_calls;
    return row;
}

std::vector<BenchmarkRow> run_bench(const BenchOptions& options) {
    for (const std::string& m : options.methods)
        if (m != "proposed" && m != "ga") throw InputError("unknown method '" + m + "'");

    struct Cell {
        Scenario scenario;
        std::string method;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (const Scenario& s : options.scenarios)
        for (const std::string& m : options.methods)
            for (std::size_t i = 0; i < options.seeds; ++i) cells.push_back({s, m, options.first_seed + i});

    std::vector<BenchmarkRow> rows(cells.size());
    std::vector<std::exception_ptr> failures(cells.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                rows[i] = run_cell(cells[i].scenario, cells[i].method, cells[i].seed, options);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, cells.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);
    return rows;
}

void write_csv(const std::vector<BenchmarkRow>& rows, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const BenchmarkRow& r : rows) {
        const bool ok = r.status == RowStatus::Ok;
        out << r.scenario.k << ',' << r.scenario.n << ',' << format_region(r.region, ':') << ',' << r.seed << ','
            << r.method << ',' << to_string(r.status) << ',' << (ok ? exact(r.max_cost) : "") << ','
            << (ok ? exact(r.total_cost) : "") << ',' << exact(r.elapsed_s) << ',' << r.iterations << ','
            << r.evaluation_calls << '\n';
    }
}

}  // namespace mtsp
