// Acceptance gate: one line per criterion, exit code = number of failures.
// Each criterion is exact; there are no tolerances to configure.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gridpatrol/env.hpp"
#include "gridpatrol/errors.hpp"
#include "gridpatrol/feasibility.hpp"
#include "gridpatrol/grid.hpp"
#include "gridpatrol/policy.hpp"
#include "gridpatrol/simulate.hpp"
#include "gridpatrol/table.hpp"
#include "gridpatrol/viz.hpp"

using namespace gridpatrol;

namespace {

int g_jobs = 1;

// all dims tuples of length d with entries drawn from vals
std::vector<GridDims> all_grids(int d, const std::vector<int>& vals) {
    std::vector<GridDims> out;
    GridDims cur(d, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == d) {
            out.push_back(cur);
            return;
        }
        for (int v : vals) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::string dims_str(const GridDims& dims) {
    std::string s = "[";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(dims[i]);
    }
    return s + "]";
}

bool cycle_is_valid(const std::vector<Position>& cyc, long long want_len) {
    if (static_cast<long long>(cyc.size()) != want_len) return false;
    std::set<Position> distinct(cyc.begin(), cyc.end());
    if (distinct.size() != cyc.size()) return false;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const Position& a = cyc[i];
        const Position& b = cyc[(i + 1) % cyc.size()];
        int dist = 0;
        for (std::size_t j = 0; j < a.size(); ++j) dist += std::abs(a[j] - b[j]);
        if (dist != 1) return false;
    }
    return true;
}

// criterion 4 property: from every start the 0-bit orbit is one Hamiltonian
// cycle over the whole grid
bool ham_orbit_from_every_start(const GridDims& dims, const GridPolicy& pol,
                                std::string& detail) {
    const long long n = vertex_count(dims);
    for (long long i = 0; i < n; ++i) {
        Trace tr = run(dims, pol, {position_at(dims, i), 0}, 4 * n);
        CycleCheck cc = induced_cycle_check(tr, dims);
        if (!cc.conclusive || !cc.is_hamiltonian_cycle || cc.length != n) {
            detail = "orbit from " + dims_str(position_at(dims, i)) + " on " + dims_str(dims) +
                     " is not one full cycle (length " + std::to_string(cc.length) + ")";
            return false;
        }
    }
    return true;
}

bool criterion1(std::string& detail) {
    for (int d = 1; d <= 4; ++d) {
        for (const GridDims& dims : all_grids(d, {2, 3, 4})) {
            const long long budget = 2 * vertex_count(dims);
            VerifyReport rep = verify_patrols(dims, policy_make_move(), {}, budget, g_jobs);
            if (rep.verdict != Verdict::Pass) {
                detail = dims_str(dims) + ": " + verdict_name(rep.verdict) + " at budget " +
                         std::to_string(budget);
                return false;
            }
        }
    }
    return true;
}

// the 0-bit policies criteria 2-3 endorse, kept for the criterion 4 sweep
std::vector<std::pair<GridDims, GridPolicy>> g_zero_bit_passers;

bool criterion2(std::string& detail) {
    const std::vector<GridDims> v1_grids = {{2}, {2, 2}, {2, 3}, {5, 3, 3, 2}, {2, 2, 2, 2}};
    for (const GridDims& dims : v1_grids) {
        GridPolicy pol = policy_memoryless_v1(dims);
        const long long n = vertex_count(dims);
        VerifyReport rep = verify_patrols(dims, pol, {}, n, g_jobs);
        if (rep.verdict != Verdict::Pass) {
            detail = dims_str(dims) + " V=1: " + verdict_name(rep.verdict);
            return false;
        }
        Trace tr = run(dims, pol, {position_at(dims, 0), 0}, 4 * n);
        CycleCheck cc = induced_cycle_check(tr, dims);
        if (!cc.is_hamiltonian_cycle || cc.length != n) {
            detail = dims_str(dims) + " V=1: orbit length " + std::to_string(cc.length) +
                     ", want " + std::to_string(n);
            return false;
        }
        g_zero_bit_passers.emplace_back(dims, pol);
    }

    const GridDims wide = {7, 5, 5, 2};
    GridPolicy pol = policy_memoryless_vgt1(wide, 2);
    VerifyReport rep = verify_patrols(wide, pol, {}, 350, g_jobs);
    if (rep.verdict != Verdict::Pass) {
        detail = "[7,5,5,2] V=2: " + std::string(verdict_name(rep.verdict));
        return false;
    }
    Trace tr = run(wide, pol, {{1, 1, 1, 1}, 0}, 4 * 350);
    CycleCheck cc = induced_cycle_check(tr, wide);
    if (!cc.is_hamiltonian_cycle || cc.length != 350) {
        detail = "[7,5,5,2] V=2: orbit length " + std::to_string(cc.length) + ", want 350";
        return false;
    }
    g_zero_bit_passers.emplace_back(wide, pol);
    return true;
}

bool criterion3(std::string& detail) {
    std::vector<GridDims> grids = all_grids(2, {2, 3, 4, 5});
    for (const GridDims& g : all_grids(3, {2, 3})) grids.push_back(g);
    for (const GridDims& dims : grids) {
        bool predicted = zero_bit_feasibility(dims, 1).patrollable_0bit;
        std::optional<TablePolicy> found;
        try {
            found = zero_bit_policy_search(dims, 1);
        } catch (const resource_error& e) {
            detail = dims_str(dims) + ": " + e.what();
            return false;
        }
        if (predicted != found.has_value()) {
            detail = dims_str(dims) + ": conditions say " + (predicted ? "yes" : "no") +
                     ", search says " + (found ? "yes" : "no");
            return false;
        }
        if (found) g_zero_bit_passers.emplace_back(dims, policy_from_table(*found, 1));
    }
    return true;
}

bool criterion4(std::string& detail) {
    if (g_zero_bit_passers.empty()) {
        detail = "no 0-bit policies collected from criteria 2-3";
        return false;
    }
    for (const auto& [dims, pol] : g_zero_bit_passers) {
        if (!ham_orbit_from_every_start(dims, pol, detail)) return false;
    }
    return true;
}

bool criterion5(std::string& detail) {
    // every grid shape with at most 24 vertices
    std::vector<GridDims> grids;
    for (int d = 1; d <= 4; ++d) {
        for (const GridDims& g : all_grids(d, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12,
                                               13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24})) {
            if (vertex_count(g) <= 24) grids.push_back(g);
        }
    }
    for (const GridDims& dims : grids) {
        auto cyc = hamiltonian_search(dims, 24);
        bool parity_ok = hamiltonian_parity(dims);
        if (cyc && !parity_ok) {
            detail = dims_str(dims) + ": cycle found where parity forbids one";
            return false;
        }
        if (cyc && !cycle_is_valid(*cyc, vertex_count(dims))) {
            detail = dims_str(dims) + ": returned cycle is not Hamiltonian";
            return false;
        }
    }
    if (hamiltonian_search({3, 3}, 24)) {
        detail = "[3,3] should have no cycle";
        return false;
    }
    if (!hamiltonian_search({2, 3}, 24) || !hamiltonian_search({2, 2, 2}, 24)) {
        detail = "[2,3] and [2,2,2] should have cycles";
        return false;
    }
    return true;
}

bool criterion6(std::string& detail) {
    for (int d = 1; d <= 5; ++d) {
        for (const GridDims& dims : all_grids(d, {2, 3, 4})) {
            const long long n = vertex_count(dims);
            for (long long i = 0; i < n; ++i) {
                SenseData s = boundary_distances(dims, position_at(dims, i), 1);
                for (MemVal mem : {0, 1}) {
                    if (!(make_move_noninductive(s, mem) == make_move_all(s, mem))) {
                        detail = dims_str(dims) + " at " + dims_str(position_at(dims, i)) +
                                 " mem " + std::to_string(mem) + ": forms disagree";
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool criterion7(std::string& detail) {
    for (int d = 1; d <= 3; ++d) {
        for (const GridDims& dims : all_grids(d, {2, 3, 4, 5, 6, 7, 8, 9})) {
            for (int V = 1; V <= 3; ++V) {
                RegionGraph rg = sensing_regions(dims, V);
                GridDims want;
                for (int n : dims) want.push_back(std::min(n, 2 * V + 1));
                if (rg.iso_dims != want) {
                    detail = dims_str(dims) + " V=" + std::to_string(V) + ": iso dims " +
                             dims_str(rg.iso_dims) + ", want " + dims_str(want);
                    return false;
                }
                if (!witness_is_isomorphism(rg)) {
                    detail = dims_str(dims) + " V=" + std::to_string(V) +
                             ": witness fails validation";
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion8(std::string& detail) {
    const std::string fx = FIXTURE_DIR;
    std::vector<std::pair<std::string, Environment>> envs;
    envs.emplace_back("2x2 grid", env_grid({2, 2}));
    envs.emplace_back("1x3 path", env_load_file(fx + "/path1x3.env"));
    envs.emplace_back("L-shape", env_load_file(fx + "/lshape.env"));

    for (const auto& [name, env] : envs) {
        DirSeq ds = dirseq_patroller(env);
        VerifyReport rep = verify_patrols_env(env, ds.policy(), ds.coverage_budget(), g_jobs);
        if (rep.verdict != Verdict::Pass) {
            detail = name + ": " + verdict_name(rep.verdict) + " within budget " +
                     std::to_string(ds.coverage_budget());
            return false;
        }
        std::unordered_set<MemVal> states;
        for (const Position& p : env.verts) {
            run_env(env, ds.policy(), {p, 0}, ds.coverage_budget(), &states);
        }
        const long long limit = 1LL << ds.state_bits_bound();
        if (static_cast<long long>(states.size()) > limit) {
            detail = name + ": " + std::to_string(states.size()) +
                     " distinct states exceed 2^" + std::to_string(ds.state_bits_bound());
            return false;
        }
    }
    return true;
}

bool criterion9(std::string& detail) {
    const std::string fx = FIXTURE_DIR;
    std::vector<std::pair<std::string, Environment>> envs;
    envs.emplace_back("holed 5x5", env_load_file(fx + "/grid5x5_hole.env"));
    envs.emplace_back("[2,3]", env_grid({2, 3}));
    envs.emplace_back("1x3 path", env_load_file(fx + "/path1x3.env"));
    envs.emplace_back("2x2 grid", env_grid({2, 2}));
    envs.emplace_back("L-shape", env_load_file(fx + "/lshape.env"));

    for (const auto& [name, env] : envs) {
        auto table = full_visibility_hamiltonian(env);
        auto cycle = hamiltonian_search_env(env);
        if (table.has_value() != cycle.has_value()) {
            detail = name + ": policy construction and cycle search disagree";
            return false;
        }
        if (table) {
            EnvPolicy pol = env_policy_from_table(*table, env_diameter(env));
            long long n = static_cast<long long>(env.verts.size());
            VerifyReport rep = verify_patrols_env(env, pol, n, g_jobs);
            if (rep.verdict != Verdict::Pass) {
                detail = name + ": full-visibility policy " + verdict_name(rep.verdict);
                return false;
            }
        }
    }
    // the named outcomes
    if (!full_visibility_hamiltonian(env_load_file(fx + "/grid5x5_hole.env")) ||
        !full_visibility_hamiltonian(env_grid({2, 3})) ||
        full_visibility_hamiltonian(env_load_file(fx + "/path1x3.env"))) {
        detail = "named fixtures: expected holed 5x5 and [2,3] yes, 1x3 path no";
        return false;
    }
    return true;
}

bool golden_matches(const std::string& name, const std::string& produced, std::string& detail) {
    const std::string path = std::string(GOLDEN_DIR) + "/" + name;
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        detail = "missing golden file " + path;
        return false;
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    if (buf.str() != produced) {
        detail = "output differs from golden " + name;
        return false;
    }
    return true;
}

bool criterion10(std::string& detail) {
    struct Case {
        std::string stem;
        GridDims dims;
        GridPolicy pol;
        bool svg_too;
    };
    std::vector<Case> cases;
    cases.push_back({"sweep_5x3x3x2", {5, 3, 3, 2}, policy_memoryless_v1({5, 3, 3, 2}), false});
    cases.push_back({"sweep_7x5x5x2_v2", {7, 5, 5, 2}, policy_memoryless_vgt1({7, 5, 5, 2}, 2),
                     false});
    cases.push_back({"onebit_4x3", {4, 3}, policy_make_move(), true});
    cases.push_back({"onebit_3x3x2", {3, 3, 2}, policy_make_move(), true});

    for (const Case& c : cases) {
        ArrowDiagram dg = arrow_diagram(c.dims, c.pol);
        if (!diagram_is_functional(dg)) {
            detail = c.stem + ": arrow map is not a total function over configurations";
            return false;
        }
        // exactly one outgoing arrow per non-transient configuration
        std::set<std::pair<long long, MemVal>> seen;
        for (const ConfigArrow& a : dg.arrows) {
            if (a.transient) continue;
            if (!seen.insert({linear_index(c.dims, a.from), a.mem_before}).second) {
                detail = c.stem + ": duplicate outgoing arrow on a steady configuration";
                return false;
            }
        }
        if (!golden_matches(c.stem + ".dot", diagram_dot(dg), detail)) return false;
        if (c.svg_too && !golden_matches(c.stem + ".svg", diagram_svg(dg), detail)) return false;
    }
    return true;
}

}  // namespace

int main() {
    g_jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    struct Entry {
        int id;
        const char* what;
        bool (*fn)(std::string&);
    };
    const Entry entries[] = {
        {1, "one-bit policy covers every grid with n_i<=4, d<=4 within 2N steps", criterion1},
        {2, "memoryless sweeps patrol their listed grids with exact N-cycles", criterion2},
        {3, "exhaustive 0-bit search agrees with the feasibility conditions", criterion3},
        {4, "passing 0-bit policies induce one Hamiltonian orbit from every start", criterion4},
        {5, "Hamiltonian search honors parity necessity on all grids up to 24 vertices",
         criterion5},
        {6, "single-pass and recursive one-bit forms agree pointwise (d<=5, n_i<=4)", criterion6},
        {7, "sensing-region graphs match truncated grids with validated witnesses", criterion7},
        {8, "direction-sequence machine covers the drawn environments within bound",
         criterion8},
        {9, "full-visibility construction tracks Hamiltonicity on all fixtures", criterion9},
        {10, "policy diagrams are functional and match the reviewed goldens", criterion10},
    };

    int failures = 0;
    for (const Entry& e : entries) {
        std::string detail;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = e.fn(detail);
        } catch (const std::exception& ex) {
            detail = std::string("unexpected exception: ") + ex.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << e.id << ": " << e.what
                  << "  (" << ms << " ms)";
        if (!ok) std::cout << "\n      " << detail;
        std::cout << "\n";
        if (!ok) ++failures;
    }
    if (failures) {
        std::cout << failures << " criterion(s) failing\n";
    } else {
        std::cout << "all 10 criteria pass\n";
    }
    return failures;
}
