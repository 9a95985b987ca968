#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "gridpatrol/policy.hpp"
#include "gridpatrol/simulate.hpp"
#include "gridpatrol/table.hpp"

namespace gridpatrol {

// A finite connected subgraph of the d-dimensional integer lattice. Vertices
// are explicit coordinate tuples (any integers); edges are unit Manhattan
// steps between present vertices.
struct Environment {
    int d = 0;
    std::vector<Position> verts;            // sorted lexicographically
    std::vector<std::vector<int>> adj;      // by vertex index, sorted
    int index_of(const Position& p) const;  // -1 when absent
};

// throws std::invalid_argument on empty input, mixed dimensions, duplicates,
// or a disconnected vertex set
Environment env_from_coords(std::vector<Position> coords);

// One coordinate tuple per line, comma-separated integers; '#' comments;
// dimension inferred from the first tuple.
Environment env_load_text(const std::string& text);
Environment env_load_file(const std::string& path);

// generators
Environment env_grid(const GridDims& dims);
// nx x ny grid minus the axis-aligned hole [hx0,hx1] x [hy0,hy1]; pass hx0 = 0
// to remove the single center cell
Environment env_grid_with_hole(int nx, int ny, int hx0 = 0, int hy0 = 0,
                               int hx1 = 0, int hy1 = 0);
// union of an a x b block and a c x d block, both anchored at (1,1)
Environment env_l_shape(int a, int b, int c, int d);

// graph-distance diameter via BFS from every vertex
int env_diameter(const Environment& env);

// The percept in a general environment: all in-environment offsets within
// Manhattan radius V of p, sorted, including the zero offset. Unlike grids,
// this is not summarized by boundary distances; the offset set is the key.
struct EnvSense {
    int d = 0;
    int V = 1;
    std::vector<Position> offsets;
};
EnvSense env_sense(const Environment& env, const Position& p, int V);
std::string env_sense_key(const EnvSense& s);  // "(0,0)(0,1)(1,0)"

// Environment-facing policy; mirrors GridPolicy over offset-set sensing.
struct EnvPolicy {
    std::string name;
    int V = 1;
    std::vector<MemVal> mems = {0};
    bool may_stay = false;
    std::function<Move(const EnvSense&, MemVal)> eval;
};

EnvPolicy env_policy_from_table(TablePolicy t, int V);

// As run()/verify_patrols() but over an environment; the target is always the
// whole vertex set. states_seen, when given, collects every memory value the
// policy carried (for measuring machine size in bits).
Trace run_env(const Environment& env, const EnvPolicy& policy, const AgentState& start,
              long long max_steps, std::unordered_set<MemVal>* states_seen = nullptr);
VerifyReport verify_patrols_env(const Environment& env, const EnvPolicy& policy,
                                long long budget, int jobs = 1);

// Direction-sequence patroller: iterates every direction sequence of length
// diam(G) in lexicographic order (axis ascending, -1 before +1), executing
// each move if legal and staying put otherwise, then backtracks the recorded
// successful moves in reverse to return to its anchor. An explicit machine:
// the whole state lives in one MemVal so its size in bits is measurable.
struct DirSeq {
    int d = 0;
    int diam = 0;
    long long num_sequences = 0;   // (2d)^diam
    long long steps_per_sequence = 0;  // 2*diam (failed moves consume a stay)

    // diam*ceil(log2(2d)) + diam + ceil(log2(2*diam)) + 2
    int state_bits_bound() const;
    long long coverage_budget() const;  // num_sequences * steps_per_sequence
    EnvPolicy policy() const;
};
// throws resource_error if the machine state does not fit the bit budget (64)
DirSeq dirseq_patroller(const Environment& env);

// Hamiltonian cycle in an arbitrary environment; same conventions as the grid
// search (cycle length >= 3, cap on vertex count).
std::optional<std::vector<Position>> hamiltonian_search_env(const Environment& env,
                                                            long long cap = 24);

// With V = diam(G) every vertex sees the entire environment, so every vertex
// is its own sensing region and a 0-bit policy may pick one direction per
// vertex. Returns such a policy following a Hamiltonian cycle, if one exists.
std::optional<TablePolicy> full_visibility_hamiltonian(const Environment& env,
                                                       long long cap = 24);

}  // namespace gridpatrol
