#pragma once

#include <cstdint>
#include <optional>

#include "mtsp/allocator.hpp"

namespace mtsp {

struct GaConfig {
    std::size_t population = 80;
    int generations = 100;
    double mutation_rate = 0.05;
    std::size_t tournament_size = 3;
    std::size_t elitism = 2;
    std::uint64_t seed = 0;
    /// Stop after this many generations without an incumbent improvement; 0 disables.
    int stall_generations = 0;
    TwoOptConfig two_opt{};
    /// Wall-clock budget checked between generations; unset means unlimited.
    std::optional<double> time_budget_s;
};

/// Genetic algorithm over assignment vectors with 2-opt-priced fitness and the
/// same lexicographic (max, total) objective as the migration solver.
///
/// Trace entry g records the incumbent after generation g; `moves` is 1 when
/// the incumbent improved in that generation.
Solution ga_solve(const Instance& inst, const GaConfig& cfg);
Solution ga_solve(const Instance& inst, const DistanceMatrix& d, const GaConfig& cfg);

}  // namespace mtsp
