#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mtsp/metric.hpp"

namespace mtsp {

struct TwoOptConfig {
    int max_passes = 50;
    /// A 2-exchange is applied only if it shortens the tour by more than this.
    double epsilon = 1e-10;
};

/// Closed tour of one agent: depot -> order[0] -> ... -> order.back() -> depot.
struct Route {
    AgentIndex agent = 0;
    std::vector<GlobalIndex> order;  // task nodes, depot excluded
    double cost = 0.0;

    friend bool operator==(const Route&, const Route&) = default;
};

/// Closed-tour length summed depot-first in visit order. Zero for an empty order.
double route_cost(const DistanceMatrix& d, AgentIndex agent, std::span<const GlobalIndex> order);

/// Nearest-neighbour tour from the depot (ties to the lowest node index).
std::vector<GlobalIndex> nearest_neighbor_order(const DistanceMatrix& d, AgentIndex agent,
                                                std::span<const GlobalIndex> cluster);

/// Improves `order` in place with first-improvement 2-opt sweeps. Returns the number of passes run.
int two_opt(const DistanceMatrix& d, AgentIndex agent, std::vector<GlobalIndex>& order,
            const TwoOptConfig& cfg);

/// Nearest-neighbour construction followed by 2-opt. The result depends only on
/// the set of nodes in `cluster`, not on their order.
Route solve_cluster_tsp(const DistanceMatrix& d, AgentIndex agent, std::span<const GlobalIndex> cluster,
                        const TwoOptConfig& cfg = {});

/// Prices a prospective cluster: the cost of solve_cluster_tsp on it.
double evaluate_delta_route(const DistanceMatrix& d, AgentIndex agent, std::span<const GlobalIndex> cluster,
                            const TwoOptConfig& cfg = {});

/// Route solver bound to one matrix that counts how often clusters are priced.
class RouteEvaluator {
public:
    RouteEvaluator(const DistanceMatrix& d, TwoOptConfig cfg) : d_(&d), cfg_(cfg) {}

    Route solve(AgentIndex agent, std::span<const GlobalIndex> cluster) {
        ++calls_;
        return solve_cluster_tsp(*d_, agent, cluster, cfg_);
    }
    double evaluate_delta_route(AgentIndex agent, std::span<const GlobalIndex> cluster) {
        ++calls_;
        return mtsp::evaluate_delta_route(*d_, agent, cluster, cfg_);
    }

    std::uint64_t calls() const { return calls_; }
    const DistanceMatrix& matrix() const { return *d_; }
    const TwoOptConfig& config() const { return cfg_; }

private:
    const DistanceMatrix* d_;
    TwoOptConfig cfg_;
    std::uint64_t calls_ = 0;
};

}  // namespace mtsp
