#include "gridpatrol/feasibility.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gridpatrol/errors.hpp"
#include "gridpatrol/simulate.hpp"
#include "ham_cycle.hpp"

namespace gridpatrol {

FeasibilityVerdict zero_bit_feasibility(const GridDims& dims, int V) {
    if (V < 1) throw std::invalid_argument("sensing range must be >= 1");
    FeasibilityVerdict v;
    if (dims.empty()) {  // single vertex, nothing to do
        v.patrollable_0bit = true;
        v.at_most_one_long_axis = true;
        v.region_product_even_or_one = true;
        v.witness = "single vertex";
        return v;
    }
    check_dims(dims);
    const int cap = 2 * V + 1;
    int long_axes = 0;
    long long region_product = 1;
    for (int n : dims) {
        if (n > cap) ++long_axes;
        region_product *= std::min(n, cap);
    }
    v.at_most_one_long_axis = long_axes <= 1;
    v.region_product_even_or_one = (region_product % 2 == 0) || (region_product == 1);
    v.patrollable_0bit = v.at_most_one_long_axis && v.region_product_even_or_one;
    if (v.patrollable_0bit) {
        v.witness = (V == 1) ? "memoryless_v1" : "memoryless_vgt1";
    } else if (!v.at_most_one_long_axis && !v.region_product_even_or_one) {
        v.witness = "more than one long axis and odd sensing-region count";
    } else if (!v.at_most_one_long_axis) {
        v.witness = "more than one axis longer than 2V+1";
    } else {
        v.witness = "odd sensing-region count";
    }
    return v;
}

bool hamiltonian_parity(const GridDims& dims) {
    check_dims(dims);
    long long n = vertex_count(dims);
    return n % 2 == 0 || n == 1;
}

std::optional<std::vector<Position>> hamiltonian_search(const GridDims& dims, long long cap) {
    check_dims(dims);
    const long long n = vertex_count(dims);
    if (n > cap) {
        throw resource_error("grid has " + std::to_string(n) +
                             " vertices, over the search cap of " + std::to_string(cap));
    }
    const int d = static_cast<int>(dims.size());
    std::vector<std::vector<int>> adj(n);
    for (long long i = 0; i < n; ++i) {
        Position p = position_at(dims, i);
        for (int ax = 0; ax < d; ++ax) {
            for (int sgn : {-1, +1}) {
                p[ax] += sgn;
                if (in_bounds(dims, p)) adj[i].push_back(static_cast<int>(linear_index(dims, p)));
                p[ax] -= sgn;
            }
        }
        std::sort(adj[i].begin(), adj[i].end());
    }
    auto found = detail::ham_cycle(adj);
    if (!found) return std::nullopt;
    std::vector<Position> cycle;
    cycle.reserve(found->size());
    for (int idx : *found) cycle.push_back(position_at(dims, idx));
    return cycle;
}

namespace {

struct RegionSearch {
    const GridDims& dims;
    int V;
    long long work_cap;
    SearchStats* stats;

    long long n = 0;
    int d = 0;
    int start_vertex = 0;
    std::vector<int> region_of;               // vertex index -> region index
    std::vector<std::vector<Step>> legal;     // per region, axis ascending, -1 first
    std::vector<int> dir;                     // chosen option index, -1 unset
    std::vector<char> visited;
    long long visited_count = 0;
    long long work = 0;
    long long candidates = 0;

    explicit RegionSearch(const GridDims& dims_, int V_, long long cap_, SearchStats* st)
        : dims(dims_), V(V_), work_cap(cap_), stats(st) {}

    int step_to(int v, const Step& s) const {
        Position p = position_at(dims, v);
        p[s.axis - 1] += s.sign;
        return static_cast<int>(linear_index(dims, p));
    }

    void spend() {
        if (++work > work_cap) {
            throw resource_error("0-bit policy search exceeded its work cap of " +
                                 std::to_string(work_cap) + " walk steps");
        }
    }

    // Extend the orbit from vertex v. An orbit that closes anywhere except
    // the start after full coverage is dead: directions are per region, so
    // nothing later can repair it.
    bool walk(int v) {
        const int r = region_of[v];
        if (dir[r] >= 0) {
            spend();
            int u = step_to(v, legal[r][dir[r]]);
            if (visited[u]) {
                ++candidates;
                return visited_count == n && u == start_vertex;
            }
            visited[u] = 1;
            ++visited_count;
            if (walk(u)) return true;
            visited[u] = 0;
            --visited_count;
            return false;
        }
        for (size_t opt = 0; opt < legal[r].size(); ++opt) {
            dir[r] = static_cast<int>(opt);
            spend();
            int u = step_to(v, legal[r][opt]);
            if (visited[u]) {
                ++candidates;
                if (visited_count == n && u == start_vertex) return true;
                dir[r] = -1;
                continue;
            }
            visited[u] = 1;
            ++visited_count;
            if (walk(u)) return true;
            visited[u] = 0;
            --visited_count;
            dir[r] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<TablePolicy> zero_bit_policy_search(const GridDims& dims, int V,
                                                  long long work_cap, SearchStats* stats) {
    check_dims(dims);
    if (V < 1) throw std::invalid_argument("sensing range must be >= 1");
    const long long n = vertex_count(dims);
    if (n > 256) {
        throw resource_error("0-bit policy search refuses grids over 256 vertices");
    }
    const int d = static_cast<int>(dims.size());
    RegionGraph rg = sensing_regions(dims, V);

    RegionSearch rs(dims, V, work_cap, stats);
    rs.n = n;
    rs.d = d;
    rs.region_of.assign(n, -1);
    for (size_t ri = 0; ri < rg.regions.size(); ++ri) {
        for (const Position& p : rg.regions[ri].members) {
            rs.region_of[linear_index(dims, p)] = static_cast<int>(ri);
        }
    }
    rs.legal.resize(rg.regions.size());
    for (size_t ri = 0; ri < rg.regions.size(); ++ri) {
        for (int ax = 1; ax <= d; ++ax) {
            // l > 0 (resp. r > 0) holds for every member of the region at once
            if (rg.regions[ri].key[ax - 1].l > 0) rs.legal[ri].push_back({ax, -1});
            if (rg.regions[ri].key[ax - 1].r > 0) rs.legal[ri].push_back({ax, +1});
        }
    }
    rs.dir.assign(rg.regions.size(), -1);
    rs.visited.assign(n, 0);
    rs.visited[rs.start_vertex] = 1;
    rs.visited_count = 1;

    bool found = false;
    try {
        found = rs.walk(rs.start_vertex);
    } catch (...) {
        if (stats) {
            stats->work = rs.work;
            stats->candidates = rs.candidates;
        }
        throw;
    }
    if (stats) {
        stats->work = rs.work;
        stats->candidates = rs.candidates;
    }
    if (!found) return std::nullopt;

    TablePolicy t;
    for (size_t ri = 0; ri < rg.regions.size(); ++ri) {
        if (rs.dir[ri] < 0) continue;  // unreachable region; cannot happen on a full cycle
        TableEntry e;
        e.key = sense_key({rg.regions[ri].key, V});
        e.mem = 0;
        e.step = rs.legal[ri][rs.dir[ri]];
        e.mem_out = 0;
        t.entries.push_back(std::move(e));
    }
    t.rebuild_index();

    // the orbit argument says this policy patrols; cheap to confirm outright
    VerifyReport rep = verify_patrols(dims, policy_from_table(t, V), Target{}, n);
    if (rep.verdict != Verdict::Pass) {
        throw std::logic_error("0-bit search produced a policy that fails verification");
    }
    return t;
}

}  // namespace gridpatrol
