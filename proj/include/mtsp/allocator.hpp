#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtsp/instance.hpp"
#include "mtsp/metric.hpp"
#include "mtsp/routing.hpp"

namespace mtsp {

/// owner[i] is the agent serving task i.
struct Assignment {
    std::vector<AgentIndex> owner;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// candidates[i] lists the min(M, k) depots nearest to task i, nearest first
/// (ties to the lower agent index).
struct Neighborhood {
    std::vector<std::vector<AgentIndex>> candidates;
};

/// (max route cost, total route cost), compared lexicographically.
struct CostPair {
    double max = 0.0;
    double total = 0.0;
};

/// Strict lexicographic order with exact floating-point comparison.
constexpr bool lex_less(const CostPair& a, const CostPair& b) {
    return a.max < b.max || (a.max == b.max && a.total < b.total);
}

enum class InitMethod { Nearest, KMeans };

struct SolverConfig {
    std::size_t neighborhood_size = 5;  // M
    bool allow_empty_clusters = false;
    int max_outer_iterations = 1000;
    std::uint64_t shuffle_seed = 0;
    TwoOptConfig two_opt{};
    InitMethod init = InitMethod::Nearest;
    /// Wall-clock budget checked between outer iterations; unset means unlimited.
    std::optional<double> time_budget_s;
};

struct TraceEntry {
    int iter = 0;
    double max = 0.0;
    double total = 0.0;
    std::uint64_t moves = 0;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct Solution {
    std::string method;
    Assignment assignment;
    std::vector<Route> routes;  // routes[g].agent == g
    double max_cost = 0.0;
    double total_cost = 0.0;
    /// Entry 0 is the initial state; entry t > 0 closes outer iteration (or generation) t.
    std::vector<TraceEntry> trace;
    int iterations = 0;
    double elapsed_s = 0.0;
    std::uint64_t evaluation_calls = 0;
    bool timed_out = false;
};

/// Each agent in index order claims its nearest unclaimed task; every remaining
/// task then goes to its nearest depot. Throws InfeasibleError when n < k.
Assignment initial_assignment(const Instance& inst, const DistanceMatrix& d);

Neighborhood build_neighborhoods(const Instance& inst, const DistanceMatrix& d, std::size_t m);

/// Groups task nodes by owner. Each cluster lists its nodes in ascending order.
std::vector<std::vector<GlobalIndex>> clusters_of(const Assignment& a, const DistanceMatrix& d);

/// Recomputes (max, total) from the route costs.
CostPair aggregate(const std::vector<Route>& routes);

/// Observer for audits. on_iteration fires at every outer-iteration boundary
/// (including the initial state) with the state the solver carries forward;
/// on_move fires for each applied migration.
struct IterationProbe {
    virtual ~IterationProbe() = default;
    virtual void on_iteration(const TraceEntry& entry, const std::vector<Route>& routes,
                              const Assignment& assignment) = 0;
    virtual void on_move(std::size_t /*task*/, AgentIndex /*from*/, AgentIndex /*to*/, const CostPair& /*before*/,
                         const CostPair& /*after*/) {}
};

/// Cluster-then-route migration search over single-task moves.
Solution solve(const Instance& inst, const SolverConfig& cfg, IterationProbe* probe = nullptr);
Solution solve(const Instance& inst, const DistanceMatrix& d, const SolverConfig& cfg,
               IterationProbe* probe = nullptr);

}  // namespace mtsp
