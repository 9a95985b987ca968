#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridpatrol/grid.hpp"
#include "gridpatrol/table.hpp"

namespace gridpatrol {

// Verdict of the 0-bit feasibility conditions for a grid at sensing range V:
// (1) at most one axis longer than 2V+1, and (2) the sensing-region count
// prod min(n_i, 2V+1) is even or equals 1.
struct FeasibilityVerdict {
    bool patrollable_0bit = false;
    bool at_most_one_long_axis = false;
    bool region_product_even_or_one = false;
    // names the construction that patrols (memoryless_v1 / memoryless_vgt1)
    // when patrollable, otherwise the violated condition
    std::string witness;
};

// dims may be empty here (a single-vertex grid, by convention patrollable);
// everywhere else dims must be a real grid.
FeasibilityVerdict zero_bit_feasibility(const GridDims& dims, int V);

// Necessary condition for a Hamiltonian cycle: 2-coloring parity. false iff
// the vertex count is odd and greater than 1.
bool hamiltonian_parity(const GridDims& dims);

// Exhaustive backtracking search for a Hamiltonian cycle (length >= 3).
// Refuses grids with more than cap vertices (resource_error).
std::optional<std::vector<Position>> hamiltonian_search(const GridDims& dims,
                                                        long long cap = 24);

inline constexpr long long kDefaultSearchWorkCap = 1LL << 28;

struct SearchStats {
    long long work = 0;        // walk steps explored
    long long candidates = 0;  // fully-closed orbits examined
};

// Exhaustive oracle for 0-bit patrollability: assigns one direction per
// sensing region (directions tried in fixed order: axis ascending, -1 before
// +1), walking the induced orbit and backtracking as soon as it closes without
// covering. Returns the first assignment whose policy patrols from every
// start, as a table policy. The cap bounds total walk steps explored;
// exceeding it throws resource_error. Grids over 256 vertices are refused.
std::optional<TablePolicy> zero_bit_policy_search(const GridDims& dims, int V,
                                                  long long work_cap = kDefaultSearchWorkCap,
                                                  SearchStats* stats = nullptr);

}  // namespace gridpatrol
