#include <gtest/gtest.h>

#include "mtsp/allocator.hpp"
#include "mtsp/error.hpp"
#include "mtsp/kmeans.hpp"
#include "mtsp/random.hpp"
#include "support/oracle.hpp"

using namespace mtsp;

namespace {

std::vector<Point> member_means(std::span<const Point> pts, const Clustering& c) {
    std::vector<Point> sum(c.centroids.size());
    std::vector<double> count(c.centroids.size(), 0.0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        sum[c.membership[i]].x += pts[i].x;
        sum[c.membership[i]].y += pts[i].y;
        count[c.membership[i]] += 1.0;
    }
    for (std::size_t g = 0; g < sum.size(); ++g)
        if (count[g] > 0) sum[g] = {sum[g].x / count[g], sum[g].y / count[g]};
    return sum;
}

}  // namespace

TEST(KMeans, PointsAsTheirOwnCentroids) {
    const std::vector<Point> pts = {{0, 0}, {3, 1}, {-2, 5}, {7, 7}};
    const Clustering c = kmeans_cluster(pts, pts);
    EXPECT_EQ(c.inertia, 0.0);
    for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(c.membership[i], i);
}

TEST(KMeans, SymmetricTwoClusterCase) {
    const std::vector<Point> pts = {{0, 0}, {0, 1}, {10, 0}, {10, 1}};
    const std::vector<Point> init = {{0, 0.5}, {10, 0.5}};
    const Clustering c = kmeans_cluster(pts, init);
    EXPECT_EQ(c.membership, (std::vector<std::size_t>{0, 0, 1, 1}));
    EXPECT_EQ(c.centroids[0], (Point{0, 0.5}));
    EXPECT_EQ(c.centroids[1], (Point{10, 0.5}));
    EXPECT_DOUBLE_EQ(c.inertia, 1.0);
}

TEST(KMeans, InertiaMonotoneAndCentroidsAreMeans) {
    const Instance inst = generate_instance(3, 12, {0, 0, 10, 10}, 11);
    const Clustering c = kmeans_cluster(inst.tasks, inst.depots);
    for (std::size_t t = 1; t < c.inertia_history.size(); ++t)
        EXPECT_LE(c.inertia_history[t], c.inertia_history[t - 1]);
    const auto means = member_means(inst.tasks, c);
    for (std::size_t g = 0; g < 3; ++g) {
        EXPECT_NEAR(c.centroids[g].x, means[g].x, 1e-9 * std::max(1.0, std::abs(means[g].x)));
        EXPECT_NEAR(c.centroids[g].y, means[g].y, 1e-9 * std::max(1.0, std::abs(means[g].y)));
    }
}

TEST(KMeans, MeanIsOptimalUnderPerturbation) {
    const Instance inst = generate_instance(4, 40, {0, 0, 10, 10}, 17);
    const Clustering c = kmeans_cluster(inst.tasks, inst.depots);
    Rng rng(3);
    for (std::size_t g = 0; g < 4; ++g) {
        double base = 0.0;
        for (std::size_t i = 0; i < inst.n(); ++i)
            if (c.membership[i] == g) base += std::pow(oracle::dist(inst.tasks[i], c.centroids[g]), 2);
        for (int trial = 0; trial < 50; ++trial) {
            const Point moved{c.centroids[g].x + (uniform_unit(rng) - 0.5), c.centroids[g].y + (uniform_unit(rng) - 0.5)};
            double alt = 0.0;
            for (std::size_t i = 0; i < inst.n(); ++i)
                if (c.membership[i] == g) alt += std::pow(oracle::dist(inst.tasks[i], moved), 2);
            EXPECT_GE(alt, base - 1e-9);
        }
    }
}

TEST(KMeans, EmptyClusterKeepsCentroid) {
    const std::vector<Point> pts = {{0, 0}, {1, 0}, {0, 1}};
    const std::vector<Point> init = {{0, 0}, {100, 100}};
    const Clustering c = kmeans_cluster(pts, init);
    EXPECT_EQ(c.centroids[1], (Point{100, 100}));
    EXPECT_EQ(c.membership, (std::vector<std::size_t>{0, 0, 0}));
}

TEST(KMeans, InputErrors) {
    const std::vector<Point> pts = {{0, 0}, {1, 1}};
    const std::vector<Point> three = {{0, 0}, {1, 1}, {2, 2}};
    const std::vector<Point> dup = {{1, 1}, {1, 1}};
    EXPECT_THROW(kmeans_cluster(pts, three), InputError);
    EXPECT_THROW(kmeans_cluster(pts, dup), InputError);
    EXPECT_THROW(kmeans_cluster(pts, std::vector<Point>{}), InputError);
}

TEST(KMeans, IterationCap) {
    const Instance inst = generate_instance(5, 200, {0, 0, 10, 10}, 2);
    KMeansOptions opts;
    opts.max_iters = 1;
    const Clustering c = kmeans_cluster(inst.tasks, inst.depots, opts);
    EXPECT_EQ(c.iterations, 1);
    EXPECT_EQ(c.inertia_history.size(), 1U);
}

TEST(KMeansAssignment, SeparatedGroupsMatchNearestDepot) {
    Instance inst;
    inst.depots = {{0, 0}, {20, 20}};
    inst.tasks = {{0.5, 0}, {-0.5, 0.3}, {20, 21}, {0, -1}, {19, 19.5}, {21, 20}};
    const DistanceMatrix d = build_matrix(inst);
    const Assignment a = kmeans_initial_assignment(inst, d);
    EXPECT_EQ(a, initial_assignment(inst, d));
    EXPECT_EQ(a.owner, (std::vector<AgentIndex>{0, 0, 1, 0, 1, 1}));
}

TEST(KMeansAssignment, SingleAgent) {
    const Instance inst = generate_instance(1, 7, {0, 0, 10, 10}, 4);
    EXPECT_EQ(kmeans_initial_assignment(inst, build_matrix(inst)).owner, std::vector<AgentIndex>(7, 0));
}

TEST(KMeansAssignment, EveryAgentOwnsATask) {
    for (std::uint64_t seed : {13ULL, 14ULL, 15ULL, 16ULL}) {
        const Instance inst = generate_instance(3, 15, {0, 0, 10, 10}, seed);
        const Assignment a = kmeans_initial_assignment(inst, build_matrix(inst));
        ASSERT_EQ(a.owner.size(), 15U);
        std::vector<int> load(3, 0);
        for (AgentIndex g : a.owner) {
            ASSERT_LT(g, 3U);
            ++load[g];
        }
        for (int l : load) EXPECT_GE(l, 1);
    }
}

TEST(KMeansAssignment, RepairsEmptyAgents) {
    // Depot 1 sits behind depot 0, so its k-means cluster stays empty.
    Instance inst;
    inst.depots = {{0, 0}, {-1, 0}};
    inst.tasks = {{10, 0}, {10, 0.1}, {10, 0.2}};
    const Assignment a = kmeans_initial_assignment(inst, build_matrix(inst));
    std::vector<int> load(2, 0);
    for (AgentIndex g : a.owner) ++load[g];
    EXPECT_GE(load[0], 1);
    EXPECT_GE(load[1], 1);
    EXPECT_THROW(kmeans_initial_assignment(generate_instance(4, 3, {0, 0, 1, 1}, 0),
                                           build_matrix(generate_instance(4, 3, {0, 0, 1, 1}, 0))),
                 InfeasibleError);
}
