#pragma once

#include <string>
#include <vector>

#include "gridpatrol/grid.hpp"
#include "gridpatrol/policy.hpp"

namespace gridpatrol {

// One policy transition (vertex, mem) -> (vertex', mem'). transient marks
// configurations the agent exits and never re-enters in steady state; figures
// omit their arrows by convention.
struct ConfigArrow {
    Position from;
    MemVal mem_before = 0;
    Position to;
    MemVal mem_after = 0;
    bool transient = false;
};

// The full arrow map of a policy over a grid, one arrow per (vertex, start-mem)
// configuration, in deterministic order (vertex index, then mem).
struct ArrowDiagram {
    GridDims dims;
    std::vector<MemVal> mems;
    std::vector<ConfigArrow> arrows;
};

ArrowDiagram arrow_diagram(const GridDims& dims, const GridPolicy& policy);

// every configuration has exactly one outgoing arrow and every arrow lands on
// a valid configuration (the arrow map is a total function)
bool diagram_is_functional(const ArrowDiagram& d);

// DOT digraph; arrows colored by memory before the step (0 red, 1 green,
// 2 blue, 3 orange). include_transient=false reproduces the figures' habit of
// omitting transient arrows.
std::string diagram_dot(const ArrowDiagram& d, bool include_transient = false);

// Hand-rolled SVG for 1-3 axis grids (3-D drawn in oblique projection).
// Arrow body color = memory before the step, head color = memory after.
// throws std::domain_error for grids with more than 3 axes
std::string diagram_svg(const ArrowDiagram& d, bool include_transient = false);

// region graph as a DOT graph, nodes labeled with the boundary-distance keys
std::string regions_dot(const RegionGraph& rg);

}  // namespace gridpatrol
