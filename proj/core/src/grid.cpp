#include "gridpatrol/grid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace gridpatrol {

void check_dims(const GridDims& dims) {
    if (dims.empty()) {
        throw std::invalid_argument("grid needs at least one dimension");
    }
    for (int n : dims) {
        if (n < 2) {
            throw std::invalid_argument("every grid dimension must be >= 2, got " +
                                        std::to_string(n));
        }
    }
}

long long vertex_count(const GridDims& dims) {
    long long c = 1;
    for (int n : dims) c *= n;
    return c;
}

bool in_bounds(const GridDims& dims, const Position& p) {
    if (p.size() != dims.size()) return false;
    for (size_t i = 0; i < dims.size(); ++i) {
        if (p[i] < 1 || p[i] > dims[i]) return false;
    }
    return true;
}

long long linear_index(const GridDims& dims, const Position& p) {
    long long idx = 0;
    long long stride = 1;
    for (size_t i = 0; i < dims.size(); ++i) {
        idx += stride * (p[i] - 1);
        stride *= dims[i];
    }
    return idx;
}

Position position_at(const GridDims& dims, long long idx) {
    Position p(dims.size());
    for (size_t i = 0; i < dims.size(); ++i) {
        p[i] = static_cast<int>(idx % dims[i]) + 1;
        idx /= dims[i];
    }
    return p;
}

SenseData boundary_distances(const GridDims& dims, const Position& p, int V) {
    check_dims(dims);
    if (V < 1) throw std::invalid_argument("sensing range must be >= 1");
    if (!in_bounds(dims, p)) throw std::domain_error("position out of bounds");
    SenseData s;
    s.V = V;
    s.axes.resize(dims.size());
    for (size_t i = 0; i < dims.size(); ++i) {
        s.axes[i].l = std::min(p[i] - 1, V);
        s.axes[i].r = std::min(dims[i] - p[i], V);
    }
    return s;
}

std::vector<Position> sense_set(const GridDims& dims, const Position& p, int V) {
    check_dims(dims);
    if (V < 1) throw std::invalid_argument("sensing range must be >= 1");
    if (!in_bounds(dims, p)) throw std::domain_error("position out of bounds");
    const int d = static_cast<int>(dims.size());
    std::vector<Position> out;
    Position off(d, 0);
    // enumerate offsets with |off|_1 <= V, keeping only in-grid ones
    auto rec = [&](auto&& self, int axis, int budget) -> void {
        if (axis == d) {
            out.push_back(off);
            return;
        }
        int lo = -std::min(budget, p[axis] - 1);
        int hi = std::min(budget, dims[axis] - p[axis]);
        for (int v = lo; v <= hi; ++v) {
            off[axis] = v;
            self(self, axis + 1, budget - std::abs(v));
        }
        off[axis] = 0;
    };
    rec(rec, 0, V);
    std::sort(out.begin(), out.end());
    return out;
}

std::string sense_key(const SenseData& s) {
    std::string key;
    for (size_t i = 0; i < s.axes.size(); ++i) {
        if (i) key += '|';
        key += std::to_string(s.axes[i].l);
        key += ',';
        key += std::to_string(s.axes[i].r);
    }
    return key;
}

RegionGraph sensing_regions(const GridDims& dims, int V) {
    check_dims(dims);
    if (V < 1) throw std::invalid_argument("sensing range must be >= 1");
    RegionGraph rg;
    rg.dims = dims;
    rg.V = V;
    for (int n : dims) rg.iso_dims.push_back(std::min(n, 2 * V + 1));

    const long long total = vertex_count(dims);
    std::map<std::vector<AxisSense>, std::vector<Position>> buckets;
    for (long long idx = 0; idx < total; ++idx) {
        Position p = position_at(dims, idx);
        buckets[boundary_distances(dims, p, V).axes].push_back(std::move(p));
    }

    std::map<std::vector<AxisSense>, int> region_index;
    for (auto& [key, members] : buckets) {
        region_index[key] = static_cast<int>(rg.regions.size());
        rg.regions.push_back({key, std::move(members)});
    }

    // adjacency from member adjacency: any grid edge crossing two regions
    std::set<std::pair<int, int>> edges;
    const int d = static_cast<int>(dims.size());
    for (int ri = 0; ri < static_cast<int>(rg.regions.size()); ++ri) {
        for (const Position& p : rg.regions[ri].members) {
            for (int ax = 0; ax < d; ++ax) {
                if (p[ax] < dims[ax]) {  // +1 neighbor; -1 seen from the other side
                    Position q = p;
                    ++q[ax];
                    int rj = region_index.at(boundary_distances(dims, q, V).axes);
                    if (rj != ri) edges.insert({std::min(ri, rj), std::max(ri, rj)});
                }
            }
        }
    }
    rg.edges.assign(edges.begin(), edges.end());

    // witness: an axis keeps its canonical iso coordinate, recovered from l/r
    for (const auto& region : rg.regions) {
        Position c(d);
        for (int i = 0; i < d; ++i) {
            int l = region.key[i].l, r = region.key[i].r;
            if (l < V) {
                c[i] = l + 1;
            } else if (r < V) {
                c[i] = rg.iso_dims[i] - r;
            } else {
                c[i] = V + 1;  // interior band; exists only when n_i >= 2V+1
            }
        }
        rg.witness.push_back(std::move(c));
    }
    return rg;
}

bool witness_is_isomorphism(const RegionGraph& rg) {
    const long long want = vertex_count(rg.iso_dims);
    if (static_cast<long long>(rg.regions.size()) != want) return false;

    std::set<long long> seen;
    for (const Position& c : rg.witness) {
        if (!in_bounds(rg.iso_dims, c)) return false;
        if (!seen.insert(linear_index(rg.iso_dims, c)).second) return false;  // not injective
    }

    // edge sets must correspond exactly in both directions: region edges map
    // to iso-grid edges, and every iso-grid edge is hit
    std::set<std::pair<long long, long long>> mapped;
    for (auto [a, b] : rg.edges) {
        long long ia = linear_index(rg.iso_dims, rg.witness[a]);
        long long ib = linear_index(rg.iso_dims, rg.witness[b]);
        int dist = 0;
        for (size_t i = 0; i < rg.witness[a].size(); ++i) {
            dist += std::abs(rg.witness[a][i] - rg.witness[b][i]);
        }
        if (dist != 1) return false;  // image not a grid edge
        mapped.insert({std::min(ia, ib), std::max(ia, ib)});
    }
    long long iso_edges = 0;
    for (size_t i = 0; i < rg.iso_dims.size(); ++i) {
        iso_edges += (vertex_count(rg.iso_dims) / rg.iso_dims[i]) * (rg.iso_dims[i] - 1);
    }
    return static_cast<long long>(mapped.size()) == iso_edges &&
           static_cast<long long>(rg.edges.size()) == iso_edges;
}

FloorSpec floor_of(const GridDims& dims, const Position& p, int k) {
    check_dims(dims);
    const int d = static_cast<int>(dims.size());
    if (k < 1 || k > d) throw std::domain_error("floor index k out of range");
    if (!in_bounds(dims, p)) throw std::domain_error("position out of bounds");
    FloorSpec f;
    f.k = k;
    f.fixed.assign(p.begin() + k, p.end());
    return f;
}

bool floor_contains(const FloorSpec& f, const Position& p) {
    if (static_cast<int>(p.size()) < f.k) return false;
    if (p.size() != f.fixed.size() + static_cast<size_t>(f.k)) return false;
    for (size_t i = 0; i < f.fixed.size(); ++i) {
        if (p[f.k + i] != f.fixed[i]) return false;
    }
    return true;
}

long long floor_size(const GridDims& dims, const FloorSpec& f) {
    long long c = 1;
    for (int i = 0; i < f.k; ++i) c *= dims[i];
    return c;
}

}  // namespace gridpatrol
