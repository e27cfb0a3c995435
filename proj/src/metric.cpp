#include "mtsp/metric.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mtsp/error.hpp"

namespace mtsp {

double euclidean(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

DistanceMatrix build_matrix(const Instance& inst, const MatrixOptions& options) {
    validate(inst);
    if (options.metric != Metric::Euclidean)
        throw InputError("only the Euclidean metric is implemented");

    const std::uint64_t size = inst.k() + inst.n();
    if (size > std::numeric_limits<GlobalIndex>::max())
        throw CapacityError("too many nodes for 32-bit indices");
    const std::uint64_t bytes = size * size * sizeof(double);
    if (size != 0 && bytes / size / sizeof(double) != size)
        throw CapacityError("distance matrix size overflows");
    if (bytes > options.memory_budget_bytes)
        throw CapacityError("distance matrix needs " + std::to_string(bytes) + " bytes, budget is " +
                            std::to_string(options.memory_budget_bytes));

    std::vector<Point> nodes;
    nodes.reserve(size);
    nodes.insert(nodes.end(), inst.depots.begin(), inst.depots.end());
    nodes.insert(nodes.end(), inst.tasks.begin(), inst.tasks.end());

    DistanceMatrix d;
    d.size_ = size;
    d.k_ = inst.k();
    d.values_.assign(size * size, 0.0);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
            const double v = euclidean(nodes[i], nodes[j]);
            d.values_[i * size + j] = v;
            d.values_[j * size + i] = v;
        }
    }
    return d;
}

}  // namespace mtsp
