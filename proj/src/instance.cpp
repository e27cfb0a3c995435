#include "mtsp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include "json_util.hpp"
#include "mtsp/error.hpp"
#include "mtsp/random.hpp"

namespace mtsp {

namespace {

using detail::json;

bool finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double sample(Rng& rng, double lo, double hi) {
    return std::min(hi, lo + uniform_unit(rng) * (hi - lo));
}

json point_json(const Point& p) { return json{{"x", p.x}, {"y", p.y}}; }

std::vector<Point> parse_points(const json& doc, const std::string& key) {
    const std::string path = "/" + key;
    const json& arr = detail::get_array(detail::require(doc, "", key), path);
    if (arr.empty()) throw ParseError(path, key + " must be non-empty");
    std::vector<Point> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string p = detail::child_path(path, i);
        out.push_back({detail::get_finite(detail::require(arr[i], p, "x"), p + "/x"),
                       detail::get_finite(detail::require(arr[i], p, "y"), p + "/y")});
    }
    return out;
}

}  // namespace

void validate(const Instance& inst) {
    if (inst.depots.empty()) throw InputError("instance needs at least one depot");
    if (inst.tasks.empty()) throw InputError("instance needs at least one task");
    const auto bad = [](const Point& p) { return !finite(p); };
    if (std::any_of(inst.depots.begin(), inst.depots.end(), bad) ||
        std::any_of(inst.tasks.begin(), inst.tasks.end(), bad))
        throw InputError("instance coordinates must be finite");
}

Instance generate_instance(std::size_t k, std::size_t n, const Region& region, std::uint64_t seed) {
    if (k == 0 || n == 0) throw InputError("agent and task counts must be at least 1");
    if (!std::isfinite(region.xmin) || !std::isfinite(region.xmax) || !std::isfinite(region.ymin) ||
        !std::isfinite(region.ymax) || !(region.width() > 0.0) || !(region.height() > 0.0))
        throw InputError("region must have strictly positive width and height");

    Rng rng(seed);
    Instance inst;
    inst.region = region;
    inst.seed = seed;
    inst.depots.reserve(k);
    inst.tasks.reserve(n);
    for (std::size_t g = 0; g < k; ++g) {
        const double x = sample(rng, region.xmin, region.xmax);
        const double y = sample(rng, region.ymin, region.ymax);
        inst.depots.push_back({x, y});
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double x = sample(rng, region.xmin, region.xmax);
        const double y = sample(rng, region.ymin, region.ymax);
        inst.tasks.push_back({x, y});
    }
    return inst;
}

std::string instance_to_json(const Instance& inst) {
    validate(inst);
    json doc;
    doc["k"] = inst.k();
    doc["n"] = inst.n();
    doc["seed"] = inst.seed ? json(*inst.seed) : json(nullptr);
    if (inst.region) {
        const Region& r = *inst.region;
        doc["region"] = json{{"xmin", r.xmin}, {"ymin", r.ymin}, {"xmax", r.xmax}, {"ymax", r.ymax}};
    } else {
        doc["region"] = nullptr;
    }
    json depots = json::array();
    for (const Point& p : inst.depots) depots.push_back(point_json(p));
    json tasks = json::array();
    for (const Point& p : inst.tasks) tasks.push_back(point_json(p));
    doc["depots"] = std::move(depots);
    doc["tasks"] = std::move(tasks);
    // nlohmann emits the shortest decimal that round-trips each double.
    return doc.dump(2) + "\n";
}

void write_instance(const Instance& inst, std::ostream& out) { out << instance_to_json(inst); }

Instance instance_from_json(const std::string& text) {
    const json doc = detail::parse_document(text);
    if (!doc.is_object()) throw ParseError("/", "expected an object");

    Instance inst;
    inst.depots = parse_points(doc, "depots");
    inst.tasks = parse_points(doc, "tasks");

    if (auto it = doc.find("k"); it != doc.end()) {
        if (detail::get_unsigned(*it, "/k") != inst.k())
            throw ParseError("/k", "does not match the number of depots");
    }
    if (auto it = doc.find("n"); it != doc.end()) {
        if (detail::get_unsigned(*it, "/n") != inst.n())
            throw ParseError("/n", "does not match the number of tasks");
    }
    if (auto it = doc.find("seed"); it != doc.end() && !it->is_null())
        inst.seed = detail::get_unsigned(*it, "/seed");
    if (auto it = doc.find("region"); it != doc.end() && !it->is_null()) {
        Region r;
        r.xmin = detail::get_finite(detail::require(*it, "/region", "xmin"), "/region/xmin");
        r.ymin = detail::get_finite(detail::require(*it, "/region", "ymin"), "/region/ymin");
        r.xmax = detail::get_finite(detail::require(*it, "/region", "xmax"), "/region/xmax");
        r.ymax = detail::get_finite(detail::require(*it, "/region", "ymax"), "/region/ymax");
        if (!(r.width() > 0.0) || !(r.height() > 0.0))
            throw ParseError("/region", "region must have positive extent");
        inst.region = r;
    }
    return inst;
}

Instance read_instance(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return instance_from_json(text);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open instance file '" + path + "'");
    try {
        return read_instance(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ":" + e.path(), e.detail());
    }
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write instance file '" + path + "'");
    write_instance(inst, out);
}

Region parse_region(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) throw InputError("");
        } catch (const std::exception&) {
            throw InputError("region '" + text + "' must be four numbers xmin,ymin,xmax,ymax");
        }
    }
    if (values.size() != 4) throw InputError("region '" + text + "' must be four numbers xmin,ymin,xmax,ymax");
    Region r{values[0], values[1], values[2], values[3]};
    if (!(r.width() > 0.0) || !(r.height() > 0.0))
        throw InputError("region '" + text + "' must have strictly positive width and height");
    return r;
}

std::string format_region(const Region& r, char sep) {
    std::ostringstream os;
    os.precision(17);
    os << r.xmin << sep << r.ymin << sep << r.xmax << sep << r.ymax;
    return os.str();
}

}  // namespace mtsp
