#include "mtsp/routing.hpp"

#include <algorithm>
#include <cassert>

namespace mtsp {

namespace {

#ifndef NDEBUG
bool distinct(std::span<const GlobalIndex> order) {
    std::vector<GlobalIndex> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}
#endif

}  // namespace

double route_cost(const DistanceMatrix& d, AgentIndex agent, std::span<const GlobalIndex> order) {
    assert(agent < d.k());
    assert(distinct(order));
    if (order.empty()) return 0.0;
    const GlobalIndex depot = d.depot_node(agent);
    double cost = d(depot, order.front());
    for (std::size_t j = 1; j < order.size(); ++j) cost += d(order[j - 1], order[j]);
    cost += d(order.back(), depot);
    return cost;
}

std::vector<GlobalIndex> nearest_neighbor_order(const DistanceMatrix& d, AgentIndex agent,
                                                std::span<const GlobalIndex> cluster) {
    std::vector<GlobalIndex> pending(cluster.begin(), cluster.end());
    std::sort(pending.begin(), pending.end());
    std::vector<GlobalIndex> order;
    order.reserve(pending.size());

    GlobalIndex current = d.depot_node(agent);
    while (!pending.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < pending.size(); ++i) {
            if (d(current, pending[i]) < d(current, pending[best])) best = i;
        }
        current = pending[best];
        order.push_back(current);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return order;
}

int two_opt(const DistanceMatrix& d, AgentIndex agent, std::vector<GlobalIndex>& order,
            const TwoOptConfig& cfg) {
    const std::size_t m = order.size();
    if (m < 3) return 0;

    // tour[0] and tour[m + 1] are the depot; tasks occupy [1, m].
    std::vector<GlobalIndex> tour;
    tour.reserve(m + 2);
    tour.push_back(d.depot_node(agent));
    tour.insert(tour.end(), order.begin(), order.end());
    tour.push_back(d.depot_node(agent));

    int passes = 0;
    bool improved = true;
    while (improved && passes < cfg.max_passes) {
        improved = false;
        ++passes;
        for (std::size_t i = 1; i < m; ++i) {
            for (std::size_t j = i + 1; j <= m; ++j) {
                const GlobalIndex a = tour[i - 1], b = tour[i];
                const GlobalIndex c = tour[j], e = tour[j + 1];
                const double delta = d(a, c) + d(b, e) - d(a, b) - d(c, e);
                if (delta < -cfg.epsilon) {
                    std::reverse(tour.begin() + static_cast<std::ptrdiff_t>(i),
                                 tour.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                    improved = true;
                }
            }
        }
    }
    std::copy(tour.begin() + 1, tour.end() - 1, order.begin());
    return passes;
}

Route solve_cluster_tsp(const DistanceMatrix& d, AgentIndex agent, std::span<const GlobalIndex> cluster,
                        const TwoOptConfig& cfg) {
    Route route;
    route.agent = agent;
    route.order = nearest_neighbor_order(d, agent, cluster);
    two_opt(d, agent, route.order, cfg);
    route.cost = route_cost(d, agent, route.order);
    return route;
}

double evaluate_delta_route(const DistanceMatrix& d, AgentIndex agent, std::span<const GlobalIndex> cluster,
                            const TwoOptConfig& cfg) {
    return solve_cluster_tsp(d, agent, cluster, cfg).cost;
}

}  // namespace mtsp
