#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gridpatrol {

// A d-dimensional grid graph [n_1] x ... x [n_d]. Vertices are integer tuples
// with 1 <= x_i <= n_i; edges join tuples at Manhattan distance 1.
using GridDims = std::vector<int>;

// 1-based coordinates. Also reused for relative offsets and for vertices of
// general integer-lattice environments (where entries may be any integers).
using Position = std::vector<int>;

// throws std::invalid_argument unless d >= 1 and every n_i >= 2
void check_dims(const GridDims& dims);

long long vertex_count(const GridDims& dims);
bool in_bounds(const GridDims& dims, const Position& p);

// row-major linearization, axis 1 varying fastest
long long linear_index(const GridDims& dims, const Position& p);
Position position_at(const GridDims& dims, long long idx);

// Per-axis boundary distances truncated at the sensing range: how many steps
// the agent could take in the negative (l) and positive (r) direction along
// the axis before leaving the grid, capped at V.
struct AxisSense {
    int l = 0;
    int r = 0;
    friend bool operator==(const AxisSense& a, const AxisSense& b) {
        return a.l == b.l && a.r == b.r;
    }
    friend bool operator<(const AxisSense& a, const AxisSense& b) {
        return a.l != b.l ? a.l < b.l : a.r < b.r;
    }
};

// The agent's entire percept on a grid: one (l, r) pair per axis.
struct SenseData {
    std::vector<AxisSense> axes;
    int V = 1;
    friend bool operator==(const SenseData& a, const SenseData& b) {
        return a.V == b.V && a.axes == b.axes;
    }
};

// l_i = min(x_i - 1, V), r_i = min(n_i - x_i, V).
// throws std::domain_error if p is out of bounds, std::invalid_argument if V < 1
SenseData boundary_distances(const GridDims& dims, const Position& p, int V);

// All in-grid offsets p' - p with Manhattan norm <= V, sorted, including the
// zero offset. Carries no information beyond boundary_distances on grids;
// exists for general environments and for testing that equivalence.
std::vector<Position> sense_set(const GridDims& dims, const Position& p, int V);

// canonical text form "l1,r1|l2,r2|...", used as a table-policy key
std::string sense_key(const SenseData& s);

// Equivalence class of vertices with identical sensing data.
struct SensingRegion {
    std::vector<AxisSense> key;
    std::vector<Position> members;  // sorted by linear index
};

// The graph of sensing regions, with adjacency inherited from the grid. It is
// isomorphic to the grid of dims m_i = min(n_i, 2V+1); we construct an explicit
// witness so the claim is checkable rather than assumed.
struct RegionGraph {
    GridDims dims;
    int V = 1;
    std::vector<SensingRegion> regions;        // sorted by key
    std::vector<std::pair<int, int>> edges;    // region index pairs, i < j, sorted
    GridDims iso_dims;                         // m_i = min(n_i, 2V+1)
    std::vector<Position> witness;             // region index -> coordinate in iso grid
};

RegionGraph sensing_regions(const GridDims& dims, int V);

// true iff witness is a bijection onto the iso grid's vertices and preserves
// adjacency in both directions
bool witness_is_isomorphism(const RegionGraph& rg);

// Sub-grid obtained by freezing coordinates k+1..d to fixed values.
struct FloorSpec {
    int k = 0;
    std::vector<int> fixed;  // q_{k+1}..q_d
};

// throws std::domain_error unless 1 <= k <= d
FloorSpec floor_of(const GridDims& dims, const Position& p, int k);
bool floor_contains(const FloorSpec& f, const Position& p);
long long floor_size(const GridDims& dims, const FloorSpec& f);

}  // namespace gridpatrol
