#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mtsp {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Closed axis-aligned box [xmin, xmax] x [ymin, ymax].
struct Region {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 10.0;
    double ymax = 10.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    bool contains(const Point& p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }

    friend bool operator==(const Region&, const Region&) = default;
};

/// Problem input: agent depots and task locations.
///
/// Depots and tasks keep their construction order; that order defines agent
/// indices [0, k) and task indices [0, n) everywhere else in the library.
struct Instance {
    std::vector<Point> depots;
    std::vector<Point> tasks;
    std::optional<Region> region;
    std::optional<std::uint64_t> seed;

    std::size_t k() const { return depots.size(); }
    std::size_t n() const { return tasks.size(); }

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws InputError unless k, n >= 1 and every coordinate is finite.
void validate(const Instance& inst);

/// Samples k depots and then n tasks uniformly over `region`.
///
/// Draw order is depot 0 (x, y), depot 1 (x, y), ..., then tasks in the same
/// fashion, all from one mt19937_64 stream seeded with `seed`. Each coordinate
/// is lo + u * (hi - lo) with u = (next() >> 11) * 2^-53, clamped to hi.
Instance generate_instance(std::size_t k, std::size_t n, const Region& region, std::uint64_t seed);

void write_instance(const Instance& inst, std::ostream& out);
std::string instance_to_json(const Instance& inst);

/// Parses the instance JSON document. Throws ParseError naming the offending path.
Instance read_instance(std::istream& in);
Instance instance_from_json(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

/// Parses "xmin,ymin,xmax,ymax".
Region parse_region(const std::string& text);
std::string format_region(const Region& region, char sep = ',');

}  // namespace mtsp
