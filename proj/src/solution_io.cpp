#include "mtsp/solution_io.hpp"

#include <fstream>
#include <iterator>

#include "json_util.hpp"
#include "mtsp/error.hpp"

namespace mtsp {

using detail::json;

std::string solution_to_json(const Solution& sol, const SolutionJsonOptions& options) {
    json doc;
    doc["method"] = sol.method;
    doc["max_cost"] = sol.max_cost;
    doc["total_cost"] = sol.total_cost;
    doc["iterations"] = sol.iterations;
    doc["elapsed_s"] = options.include_timing ? sol.elapsed_s : 0.0;
    doc["evaluation_calls"] = sol.evaluation_calls;
    doc["timed_out"] = sol.timed_out;
    doc["assignment"] = sol.assignment.owner;
    json routes = json::array();
    for (const Route& r : sol.routes) routes.push_back({{"agent", r.agent}, {"order", r.order}, {"cost", r.cost}});
    doc["routes"] = std::move(routes);
    json trace = json::array();
    for (const TraceEntry& t : sol.trace)
        trace.push_back({{"iter", t.iter}, {"max", t.max}, {"total", t.total}, {"moves", t.moves}});
    doc["trace"] = std::move(trace);
    return doc.dump(2) + "\n";
}

void write_solution(const Solution& sol, std::ostream& out, const SolutionJsonOptions& options) {
    out << solution_to_json(sol, options);
}

Solution solution_from_json(const std::string& text) {
    const json doc = detail::parse_document(text);
    if (!doc.is_object()) throw ParseError("/", "expected an object");

    const auto number = [&](const json& obj, const std::string& path, const char* key) {
        return detail::get_finite(detail::require(obj, path, key), detail::child_path(path, key));
    };
    const auto count = [&](const json& obj, const std::string& path, const char* key) {
        return detail::get_unsigned(detail::require(obj, path, key), detail::child_path(path, key));
    };

    Solution sol;
    if (auto it = doc.find("method"); it != doc.end() && it->is_string()) sol.method = it->get<std::string>();
    sol.max_cost = number(doc, "", "max_cost");
    sol.total_cost = number(doc, "", "total_cost");
    sol.iterations = static_cast<int>(count(doc, "", "iterations"));
    sol.elapsed_s = number(doc, "", "elapsed_s");
    sol.evaluation_calls = count(doc, "", "evaluation_calls");
    if (auto it = doc.find("timed_out"); it != doc.end() && it->is_boolean()) sol.timed_out = it->get<bool>();

    const json& owners = detail::get_array(detail::require(doc, "", "assignment"), "/assignment");
    for (std::size_t i = 0; i < owners.size(); ++i)
        sol.assignment.owner.push_back(
            static_cast<AgentIndex>(detail::get_unsigned(owners[i], detail::child_path("/assignment", i))));

    const json& routes = detail::get_array(detail::require(doc, "", "routes"), "/routes");
    for (std::size_t g = 0; g < routes.size(); ++g) {
        const std::string path = detail::child_path("/routes", g);
        Route r;
        r.agent = static_cast<AgentIndex>(count(routes[g], path, "agent"));
        r.cost = number(routes[g], path, "cost");
        const json& order = detail::get_array(detail::require(routes[g], path, "order"), path + "/order");
        for (std::size_t j = 0; j < order.size(); ++j)
            r.order.push_back(static_cast<GlobalIndex>(
                detail::get_unsigned(order[j], detail::child_path(path + "/order", j))));
        sol.routes.push_back(std::move(r));
    }

    const json& trace = detail::get_array(detail::require(doc, "", "trace"), "/trace");
    for (std::size_t t = 0; t < trace.size(); ++t) {
        const std::string path = detail::child_path("/trace", t);
        sol.trace.push_back({static_cast<int>(count(trace[t], path, "iter")), number(trace[t], path, "max"),
                             number(trace[t], path, "total"), count(trace[t], path, "moves")});
    }
    return sol;
}

Solution read_solution(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return solution_from_json(text);
}

Solution load_solution(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open solution file '" + path + "'");
    try {
        return read_solution(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ":" + e.path(), e.detail());
    }
}

void save_solution(const Solution& sol, const std::string& path, const SolutionJsonOptions& options) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write solution file '" + path + "'");
    write_solution(sol, out, options);
}

}  // namespace mtsp
