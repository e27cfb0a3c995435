#include "mtsp/allocator.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <numeric>
#include <set>
#include <utility>

#include "mtsp/error.hpp"
#include "mtsp/kmeans.hpp"
#include "mtsp/random.hpp"

namespace mtsp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Route costs ordered by value, for "largest cost outside two clusters" queries.
class CostIndex {
public:
    explicit CostIndex(const std::vector<Route>& routes) {
        for (const Route& r : routes) entries_.emplace(r.cost, r.agent);
    }

    double max() const { return entries_.empty() ? 0.0 : entries_.rbegin()->first; }

    double max_excluding(AgentIndex a, AgentIndex b) const {
        for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
            if (it->second != a && it->second != b) return it->first;
        }
        return 0.0;
    }

    void update(AgentIndex g, double old_cost, double new_cost) {
        entries_.erase({old_cost, g});
        entries_.emplace(new_cost, g);
    }

private:
    std::set<std::pair<double, AgentIndex>> entries_;
};

std::vector<GlobalIndex> without_node(const std::vector<GlobalIndex>& cluster, GlobalIndex node) {
    std::vector<GlobalIndex> out;
    out.reserve(cluster.size());
    for (GlobalIndex v : cluster)
        if (v != node) out.push_back(v);
    return out;
}

std::vector<GlobalIndex> with_node(const std::vector<GlobalIndex>& cluster, GlobalIndex node) {
    std::vector<GlobalIndex> out;
    out.reserve(cluster.size() + 1);
    out = cluster;
    out.insert(std::upper_bound(out.begin(), out.end(), node), node);
    return out;
}

Solution run(const Instance& inst, const DistanceMatrix& d, const SolverConfig& cfg, IterationProbe* probe,
             Clock::time_point start) {
    if (cfg.neighborhood_size < 1) throw InputError("neighborhood size M must be at least 1");
    if (cfg.max_outer_iterations < 1) throw InputError("max_outer_iterations must be at least 1");

    const std::size_t k = inst.k();
    const std::size_t n = inst.n();

    Solution sol;
    sol.method = "proposed";
    sol.assignment =
        cfg.init == InitMethod::KMeans ? kmeans_initial_assignment(inst, d) : initial_assignment(inst, d);
    std::vector<AgentIndex>& owner = sol.assignment.owner;

    RouteEvaluator eval(d, cfg.two_opt);
    std::vector<std::vector<GlobalIndex>> clusters = clusters_of(sol.assignment, d);
    std::vector<Route>& routes = sol.routes;
    routes.reserve(k);
    for (AgentIndex g = 0; g < k; ++g) routes.push_back(eval.solve(g, clusters[g]));

    CostIndex costs(routes);
    CostPair current{costs.max(), aggregate(routes).total};
    sol.trace.push_back({0, current.max, current.total, 0});
    if (probe) probe->on_iteration(sol.trace.back(), routes, sol.assignment);

    const Neighborhood nbh = build_neighborhoods(inst, d, cfg.neighborhood_size);

    Rng rng(cfg.shuffle_seed);
    std::vector<std::size_t> visit(n);
    for (int iter = 1; iter <= cfg.max_outer_iterations; ++iter) {
        std::iota(visit.begin(), visit.end(), std::size_t{0});
        shuffle(std::span<std::size_t>(visit), rng);

        std::uint64_t moves = 0;
        for (std::size_t task : visit) {
            const GlobalIndex node = d.task_node(task);
            const AgentIndex from = owner[task];
            if (clusters[from].size() == 1 && !cfg.allow_empty_clusters) continue;

            // The source side of every candidate move is the same cluster minus this task.
            std::optional<Route> shrunk;
            for (AgentIndex to : nbh.candidates[task]) {
                if (to == from) continue;
                if (!shrunk) shrunk = eval.solve(from, without_node(clusters[from], node));

                std::vector<GlobalIndex> grown_cluster = with_node(clusters[to], node);
                Route grown = eval.solve(to, grown_cluster);

                const CostPair candidate{
                    std::max({shrunk->cost, grown.cost, costs.max_excluding(from, to)}),
                    current.total - routes[from].cost - routes[to].cost + shrunk->cost + grown.cost};
                if (!lex_less(candidate, current)) continue;

                costs.update(from, routes[from].cost, shrunk->cost);
                costs.update(to, routes[to].cost, grown.cost);
                clusters[from] = without_node(clusters[from], node);
                clusters[to] = std::move(grown_cluster);
                routes[from] = std::move(*shrunk);
                routes[to] = std::move(grown);
                owner[task] = to;
                if (probe) probe->on_move(task, from, to, current, candidate);
                current = candidate;
                assert(current.max == costs.max());
                ++moves;
                break;
            }
        }

        sol.trace.push_back({iter, current.max, current.total, moves});
        sol.iterations = iter;
        if (probe) probe->on_iteration(sol.trace.back(), routes, sol.assignment);
        if (moves == 0) break;
        if (cfg.time_budget_s && seconds_since(start) > *cfg.time_budget_s) {
            sol.timed_out = true;
            break;
        }
    }

    for (AgentIndex g = 0; g < k; ++g) routes[g] = eval.solve(g, clusters[g]);
    const CostPair final_costs = aggregate(routes);
    sol.max_cost = final_costs.max;
    sol.total_cost = final_costs.total;
    sol.evaluation_calls = eval.calls();
    sol.elapsed_s = seconds_since(start);
    return sol;
}

}  // namespace

Assignment initial_assignment(const Instance& inst, const DistanceMatrix& d) {
    const std::size_t k = inst.k();
    const std::size_t n = inst.n();
    if (n < k) throw InfeasibleError("cannot guarantee one task per agent: n < k");

    constexpr AgentIndex unassigned = static_cast<AgentIndex>(-1);
    Assignment a;
    a.owner.assign(n, unassigned);

    for (AgentIndex g = 0; g < k; ++g) {
        const GlobalIndex depot = d.depot_node(g);
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (a.owner[i] != unassigned) continue;
            if (best == n || d(depot, d.task_node(i)) < d(depot, d.task_node(best))) best = i;
        }
        a.owner[best] = g;
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (a.owner[i] != unassigned) continue;
        const GlobalIndex node = d.task_node(i);
        AgentIndex best = 0;
        for (AgentIndex g = 1; g < k; ++g) {
            if (d(node, d.depot_node(g)) < d(node, d.depot_node(best))) best = g;
        }
        a.owner[i] = best;
    }
    return a;
}

Neighborhood build_neighborhoods(const Instance& inst, const DistanceMatrix& d, std::size_t m) {
    if (m < 1) throw InputError("neighborhood size M must be at least 1");
    const std::size_t k = inst.k();
    const std::size_t keep = std::min(m, k);

    Neighborhood nbh;
    nbh.candidates.resize(inst.n());
    std::vector<AgentIndex> agents(k);
    for (std::size_t i = 0; i < inst.n(); ++i) {
        const GlobalIndex node = d.task_node(i);
        std::iota(agents.begin(), agents.end(), AgentIndex{0});
        std::partial_sort(agents.begin(), agents.begin() + static_cast<std::ptrdiff_t>(keep), agents.end(),
                          [&](AgentIndex a, AgentIndex b) {
                              const double da = d(node, d.depot_node(a));
                              const double db = d(node, d.depot_node(b));
                              return da < db || (da == db && a < b);
                          });
        nbh.candidates[i].assign(agents.begin(), agents.begin() + static_cast<std::ptrdiff_t>(keep));
    }
    return nbh;
}

std::vector<std::vector<GlobalIndex>> clusters_of(const Assignment& a, const DistanceMatrix& d) {
    std::vector<std::vector<GlobalIndex>> clusters(d.k());
    for (std::size_t i = 0; i < a.owner.size(); ++i) {
        assert(a.owner[i] < d.k());
        clusters[a.owner[i]].push_back(d.task_node(i));
    }
    return clusters;
}

CostPair aggregate(const std::vector<Route>& routes) {
    CostPair c;
    for (const Route& r : routes) {
        c.max = std::max(c.max, r.cost);
        c.total += r.cost;
    }
    return c;
}

Solution solve(const Instance& inst, const SolverConfig& cfg, IterationProbe* probe) {
    const auto start = Clock::now();
    validate(inst);
    if (inst.n() < inst.k()) throw InfeasibleError("cannot guarantee one task per agent: n < k");
    const DistanceMatrix d = build_matrix(inst);
    return run(inst, d, cfg, probe, start);
}

Solution solve(const Instance& inst, const DistanceMatrix& d, const SolverConfig& cfg, IterationProbe* probe) {
    const auto start = Clock::now();
    validate(inst);
    return run(inst, d, cfg, probe, start);
}

}  // namespace mtsp
