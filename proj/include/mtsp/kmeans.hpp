#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mtsp/instance.hpp"
#include "mtsp/metric.hpp"

namespace mtsp {

struct Assignment;

struct Clustering {
    std::vector<Point> centroids;
    std::vector<std::size_t> membership;  // per point
    /// Sum of squared distances from each point to its centroid.
    double inertia = 0.0;
    /// Inertia after each update step, in order.
    std::vector<double> inertia_history;
    int iterations = 0;
};

struct KMeansOptions {
    int max_iters = 100;
    /// Stop once an update step improves inertia by less than this.
    double tol = 1e-12;
};

/// Lloyd iterations from the given centroids. Nearest-centroid ties go to the
/// lower cluster index; an empty cluster keeps its previous centroid.
Clustering kmeans_cluster(std::span<const Point> points, std::span<const Point> init_centroids,
                          const KMeansOptions& options = {});

double inertia(std::span<const Point> points, std::span<const Point> centroids,
               std::span<const std::size_t> membership);

/// K-means seeded at the depots, clusters matched greedily to depots, then
/// empty agents repaired so that every agent owns a task.
Assignment kmeans_initial_assignment(const Instance& inst, const DistanceMatrix& d,
                                     const KMeansOptions& options = {});

}  // namespace mtsp
