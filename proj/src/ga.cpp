#include "mtsp/ga.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "mtsp/error.hpp"
#include "mtsp/random.hpp"

namespace mtsp {

namespace {

using Clock = std::chrono::steady_clock;

struct Individual {
    std::vector<AgentIndex> genes;
    CostPair fitness;
};

bool fitter(const Individual& a, const Individual& b) { return lex_less(a.fitness, b.fitness); }

class Evolution {
public:
    Evolution(const Instance& inst, const DistanceMatrix& d, const GaConfig& cfg)
        : inst_(inst), d_(d), cfg_(cfg), eval_(d, cfg.two_opt), rng_(cfg.seed) {}

    Solution run(Clock::time_point start);

private:
    CostPair evaluate(const std::vector<AgentIndex>& genes) {
        CostPair f;
        const auto clusters = clusters_of(Assignment{genes}, d_);
        for (AgentIndex g = 0; g < inst_.k(); ++g) {
            const double c = eval_.evaluate_delta_route(g, clusters[g]);
            f.max = std::max(f.max, c);
            f.total += c;
        }
        return f;
    }

    std::vector<AgentIndex> random_genes() {
        const std::size_t n = inst_.n(), k = inst_.k();
        std::vector<std::size_t> tasks(n);
        std::iota(tasks.begin(), tasks.end(), std::size_t{0});
        shuffle(std::span<std::size_t>(tasks), rng_);
        std::vector<AgentIndex> genes(n);
        for (std::size_t j = 0; j < n; ++j) {
            genes[tasks[j]] = j < k ? static_cast<AgentIndex>(j) : static_cast<AgentIndex>(uniform_below(rng_, k));
        }
        return genes;
    }

    const Individual& tournament(const std::vector<Individual>& pop) {
        const Individual* best = &pop[uniform_below(rng_, pop.size())];
        for (std::size_t t = 1; t < cfg_.tournament_size; ++t) {
            const Individual& rival = pop[uniform_below(rng_, pop.size())];
            if (fitter(rival, *best)) best = &rival;
        }
        return *best;
    }

    /// Any agent left without tasks takes the task nearest its depot among clusters of size >= 2.
    void repair(std::vector<AgentIndex>& genes) const {
        const std::size_t n = inst_.n(), k = inst_.k();
        std::vector<std::size_t> load(k, 0);
        for (AgentIndex g : genes) ++load[g];
        for (AgentIndex g = 0; g < k; ++g) {
            if (load[g] != 0) continue;
            const GlobalIndex depot = d_.depot_node(g);
            std::size_t best = n;
            for (std::size_t i = 0; i < n; ++i) {
                if (load[genes[i]] < 2) continue;
                if (best == n || d_(depot, d_.task_node(i)) < d_(depot, d_.task_node(best))) best = i;
            }
            --load[genes[best]];
            genes[best] = g;
            ++load[g];
        }
    }

    const Instance& inst_;
    const DistanceMatrix& d_;
    GaConfig cfg_;
    RouteEvaluator eval_;
    Rng rng_;
};

Solution Evolution::run(Clock::time_point start) {
    const std::size_t n = inst_.n(), k = inst_.k();

    std::vector<Individual> pop;
    pop.reserve(cfg_.population);
    pop.push_back({initial_assignment(inst_, d_).owner, {}});
    while (pop.size() < cfg_.population) pop.push_back({random_genes(), {}});
    for (Individual& ind : pop) ind.fitness = evaluate(ind.genes);
    std::stable_sort(pop.begin(), pop.end(), fitter);

    Solution sol;
    sol.method = "ga";
    sol.trace.push_back({0, pop.front().fitness.max, pop.front().fitness.total, 0});

    int stalled = 0;
    std::vector<Individual> next;
    next.reserve(cfg_.population);
    for (int gen = 1; gen <= cfg_.generations; ++gen) {
        next.assign(pop.begin(), pop.begin() + static_cast<std::ptrdiff_t>(cfg_.elitism));
        while (next.size() < cfg_.population) {
            const Individual& a = tournament(pop);
            const Individual& b = tournament(pop);
            Individual child;
            child.genes.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                child.genes[i] = (rng_() & 1U) ? a.genes[i] : b.genes[i];
                if (uniform_unit(rng_) < cfg_.mutation_rate)
                    child.genes[i] = static_cast<AgentIndex>(uniform_below(rng_, k));
            }
            repair(child.genes);
            child.fitness = evaluate(child.genes);
            next.push_back(std::move(child));
        }
        std::stable_sort(next.begin(), next.end(), fitter);
        const bool improved = lex_less(next.front().fitness, pop.front().fitness);
        pop.swap(next);

        sol.trace.push_back({gen, pop.front().fitness.max, pop.front().fitness.total, improved ? 1U : 0U});
        sol.iterations = gen;
        stalled = improved ? 0 : stalled + 1;
        if (cfg_.stall_generations > 0 && stalled >= cfg_.stall_generations) break;
        if (cfg_.time_budget_s && std::chrono::duration<double>(Clock::now() - start).count() > *cfg_.time_budget_s) {
            sol.timed_out = true;
            break;
        }
    }

    sol.assignment.owner = pop.front().genes;
    const auto clusters = clusters_of(sol.assignment, d_);
    for (AgentIndex g = 0; g < k; ++g) sol.routes.push_back(eval_.solve(g, clusters[g]));
    const CostPair final_costs = aggregate(sol.routes);
    sol.max_cost = final_costs.max;
    sol.total_cost = final_costs.total;
    sol.evaluation_calls = eval_.calls();
    sol.elapsed_s = std::chrono::duration<double>(Clock::now() - start).count();
    return sol;
}

void check(const GaConfig& cfg) {
    if (cfg.population < 2) throw InputError("GA population must be at least 2");
    if (!(cfg.mutation_rate >= 0.0 && cfg.mutation_rate <= 1.0))
        throw InputError("GA mutation rate must lie in [0, 1]");
    if (cfg.elitism >= cfg.population) throw InputError("GA elitism must be smaller than the population");
    if (cfg.tournament_size < 1) throw InputError("GA tournament size must be at least 1");
    if (cfg.generations < 0) throw InputError("GA generation count must be non-negative");
}

}  // namespace

Solution ga_solve(const Instance& inst, const GaConfig& cfg) {
    const auto start = Clock::now();
    validate(inst);
    check(cfg);
    if (inst.n() < inst.k()) throw InfeasibleError("cannot guarantee one task per agent: n < k");
    const DistanceMatrix d = build_matrix(inst);
    return Evolution(inst, d, cfg).run(start);
}

Solution ga_solve(const Instance& inst, const DistanceMatrix& d, const GaConfig& cfg) {
    const auto start = Clock::now();
    validate(inst);
    check(cfg);
    if (inst.n() < inst.k()) throw InfeasibleError("cannot guarantee one task per agent: n < k");
    return Evolution(inst, d, cfg).run(start);
}

}  // namespace mtsp
