#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mtsp/instance.hpp"

namespace mtsp {

/// Row/column index into the distance matrix: [0, k) are depots, [k, k+n) are tasks.
using GlobalIndex = std::uint32_t;
using AgentIndex = std::uint32_t;

enum class Metric {
    Euclidean,
    /// Shortest obstacle-avoiding path length. Not implemented; selecting it throws.
    AStar,
};

struct MatrixOptions {
    Metric metric = Metric::Euclidean;
    /// Upper bound on the bytes the dense table may occupy.
    std::uint64_t memory_budget_bytes = 8'000'000'000ULL;
};

/// Dense, symmetric, immutable table of pairwise distances over depots and tasks.
class DistanceMatrix {
public:
    DistanceMatrix() = default;

    std::size_t size() const { return size_; }
    std::size_t k() const { return k_; }
    std::size_t n() const { return size_ - k_; }

    GlobalIndex depot_node(AgentIndex g) const {
        assert(g < k_);
        return g;
    }
    GlobalIndex task_node(std::size_t task) const {
        assert(task < n());
        return static_cast<GlobalIndex>(k_ + task);
    }
    std::size_t task_of(GlobalIndex node) const {
        assert(node >= k_ && node < size_);
        return node - k_;
    }

    double operator()(GlobalIndex a, GlobalIndex b) const {
        assert(a < size_ && b < size_);
        return values_[static_cast<std::size_t>(a) * size_ + b];
    }

private:
    friend DistanceMatrix build_matrix(const Instance&, const MatrixOptions&);

    std::size_t size_ = 0;
    std::size_t k_ = 0;
    std::vector<double> values_;
};

/// Euclidean distance computed as sqrt(dx*dx + dy*dy), in that order.
double euclidean(const Point& a, const Point& b);

DistanceMatrix build_matrix(const Instance& inst, const MatrixOptions& options = {});

inline double distance(const DistanceMatrix& d, GlobalIndex a, GlobalIndex b) { return d(a, b); }

}  // namespace mtsp
