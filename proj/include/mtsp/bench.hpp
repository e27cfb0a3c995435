#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mtsp/allocator.hpp"
#include "mtsp/ga.hpp"
#include "mtsp/instance.hpp"

namespace mtsp {

struct Scenario {
    std::size_t k = 0;
    std::size_t n = 0;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Parses "5x20,10x50,...".
std::vector<Scenario> parse_scenarios(const std::string& text);

/// The four diagonal scales 5x20, 10x50, 100x500, 1000x5000.
std::vector<Scenario> default_scenarios();

/// Population and generation cap used for GA runs at each scale:
/// 80/100 up to 20 tasks, 80/1000 up to 50 tasks, 40/1000 beyond.
GaConfig ga_defaults_for(const Scenario& s);

enum class RowStatus { Ok, Timeout, Infeasible };

const char* to_string(RowStatus s);

struct BenchmarkRow {
    Scenario scenario;
    Region region;
    std::uint64_t seed = 0;
    std::string method;
    RowStatus status = RowStatus::Ok;
    double max_cost = 0.0;
    double total_cost = 0.0;
    double elapsed_s = 0.0;
    int iterations = 0;
    std::uint64_t evaluation_calls = 0;
};

struct BenchOptions {
    std::vector<Scenario> scenarios = default_scenarios();
    std::vector<std::string> methods = {"proposed", "ga"};
    Region region{};
    std::size_t seeds = 1;
    std::uint64_t first_seed = 1;
    /// Per-run wall-clock budget in seconds.
    double budget_s = 120.0;
    /// Shuffle seed and budget are overwritten per run.
    SolverConfig proposed{};
    std::optional<std::size_t> ga_population;
    std::optional<int> ga_generations;
    std::optional<double> ga_mutation;
    /// Independent runs executed concurrently; rows are still returned in cell order.
    std::size_t jobs = 1;
};

/// One (scenario, method, seed) cell. The instance seed, the solver's shuffle
/// seed and the GA seed are all `seed`.
BenchmarkRow run_cell(const Scenario& scenario, const std::string& method, std::uint64_t seed,
                      const BenchOptions& options);

/// All cells in (scenario, method, seed) order.
std::vector<BenchmarkRow> run_bench(const BenchOptions& options);

/// Header: k,n,region,seed,method,status,max_cost,total_cost,elapsed_s,iterations,evaluation_calls
/// The region column is "xmin:ymin:xmax:ymax"; cost columns are empty unless status is ok.
void write_csv(const std::vector<BenchmarkRow>& rows, std::ostream& out);

inline constexpr const char* kCsvHeader =
    "k,n,region,seed,method,status,max_cost,total_cost,elapsed_s,iterations,evaluation_calls";

}  // namespace mtsp
