#pragma once

#include <string>
#include <vector>

#include "mtsp/allocator.hpp"
#include "mtsp/instance.hpp"

namespace mtsp {

/// Depots as triangles, tasks as circles, and one closed path per agent,
/// coloured per agent. Output is a pure function of the inputs.
std::string render_routes_svg(const Instance& inst, const Solution& sol);

/// Max-cost and total-cost series against iteration, one panel each.
/// Throws InputError on an empty trace.
std::string render_convergence_svg(const std::vector<TraceEntry>& trace);

}  // namespace mtsp
