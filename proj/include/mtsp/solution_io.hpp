#pragma once

#include <iosfwd>
#include <string>

#include "mtsp/allocator.hpp"

namespace mtsp {

struct SolutionJsonOptions {
    /// When false, elapsed_s is written as 0 so the document depends only on
    /// (instance, config, seed).
    bool include_timing = true;
};

std::string solution_to_json(const Solution& sol, const SolutionJsonOptions& options = {});
void write_solution(const Solution& sol, std::ostream& out, const SolutionJsonOptions& options = {});

/// Reads a solution document. Route costs are taken as written.
Solution solution_from_json(const std::string& text);
Solution read_solution(std::istream& in);

Solution load_solution(const std::string& path);
void save_solution(const Solution& sol, const std::string& path, const SolutionJsonOptions& options = {});

}  // namespace mtsp
