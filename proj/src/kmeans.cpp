#include "mtsp/kmeans.hpp"

#include <algorithm>
#include <limits>

#include "mtsp/allocator.hpp"
#include "mtsp/error.hpp"

namespace mtsp {

namespace {

double squared(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

std::size_t nearest(const Point& p, std::span<const Point> centroids) {
    std::size_t best = 0;
    double best_d = squared(p, centroids[0]);
    for (std::size_t g = 1; g < centroids.size(); ++g) {
        const double dg = squared(p, centroids[g]);
        if (dg < best_d) {
            best = g;
            best_d = dg;
        }
    }
    return best;
}

}  // namespace

double inertia(std::span<const Point> points, std::span<const Point> centroids,
               std::span<const std::size_t> membership) {
    double sum = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) sum += squared(points[i], centroids[membership[i]]);
    return sum;
}

Clustering kmeans_cluster(std::span<const Point> points, std::span<const Point> init_centroids,
                          const KMeansOptions& options) {
    const std::size_t k = init_centroids.size();
    if (k == 0) throw InputError("k-means needs at least one centroid");
    if (k > points.size()) throw InputError("k-means needs k <= number of points");
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (init_centroids[a] == init_centroids[b]) throw InputError("initial centroids must be distinct");

    Clustering c;
    c.centroids.assign(init_centroids.begin(), init_centroids.end());
    c.membership.assign(points.size(), std::numeric_limits<std::size_t>::max());

    std::vector<double> sx(k), sy(k);
    std::vector<std::size_t> count(k);
    double previous = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < options.max_iters; ++iter) {
        bool changed = false;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const std::size_t g = nearest(points[i], c.centroids);
            if (g != c.membership[i]) {
                c.membership[i] = g;
                changed = true;
            }
        }
        if (!changed) break;

        std::fill(sx.begin(), sx.end(), 0.0);
        std::fill(sy.begin(), sy.end(), 0.0);
        std::fill(count.begin(), count.end(), 0);
        for (std::size_t i = 0; i < points.size(); ++i) {
            sx[c.membership[i]] += points[i].x;
            sy[c.membership[i]] += points[i].y;
            ++count[c.membership[i]];
        }
        for (std::size_t g = 0; g < k; ++g) {
            if (count[g] == 0) continue;
            const auto m = static_cast<double>(count[g]);
            c.centroids[g] = {sx[g] / m, sy[g] / m};
        }
        ++c.iterations;

        const double current = inertia(points, c.centroids, c.membership);
        c.inertia_history.push_back(current);
        if (previous - current < options.tol) break;
        previous = current;
    }
    c.inertia = inertia(points, c.centroids, c.membership);
    return c;
}

Assignment kmeans_initial_assignment(const Instance& inst, const DistanceMatrix& d,
                                     const KMeansOptions& options) {
    const std::size_t k = inst.k();
    const std::size_t n = inst.n();
    if (n < k) throw InfeasibleError("cannot guarantee one task per agent: n < k");

    const Clustering c = kmeans_cluster(inst.tasks, inst.depots, options);

    // Clusters in index order each take the nearest still-unmatched depot.
    std::vector<AgentIndex> depot_of(k);
    std::vector<bool> taken(k, false);
    for (std::size_t cl = 0; cl < k; ++cl) {
        AgentIndex best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (AgentIndex g = 0; g < k; ++g) {
            if (taken[g]) continue;
            const double dg = euclidean(c.centroids[cl], inst.depots[g]);
            if (dg < best_d) {
                best = g;
                best_d = dg;
            }
        }
        taken[best] = true;
        depot_of[cl] = best;
    }

    Assignment a;
    a.owner.resize(n);
    std::vector<std::size_t> load(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
        a.owner[i] = depot_of[c.membership[i]];
        ++load[a.owner[i]];
    }

    for (AgentIndex g = 0; g < k; ++g) {
        if (load[g] != 0) continue;
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (load[a.owner[i]] < 2) continue;
            if (best == n || d(d.depot_node(g), d.task_node(i)) < d(d.depot_node(g), d.task_node(best)))
                best = i;
        }
        // n >= k guarantees some cluster still has two tasks.
        --load[a.owner[best]];
        a.owner[best] = g;
        ++load[g];
    }
    return a;
}

}  // namespace mtsp
