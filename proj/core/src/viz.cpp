#include "gridpatrol/viz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gridpatrol/errors.hpp"

namespace gridpatrol {

namespace {

const char* kMemColor[] = {"red", "green", "blue", "orange"};

const char* mem_color(MemVal m) { return kMemColor[static_cast<size_t>(m) % 4]; }

// functional-graph cycle membership: a configuration is transient iff the
// orbit never returns to it, i.e. it sits on no cycle
std::vector<bool> on_cycle_flags(const std::vector<long long>& next) {
    const size_t n = next.size();
    std::vector<bool> cyclic(n, false);
    std::vector<int> state(n, 0);  // 0 fresh, 1 on current walk, 2 settled
    std::vector<long long> walk;
    for (size_t s = 0; s < n; ++s) {
        if (state[s] != 0) continue;
        walk.clear();
        long long v = static_cast<long long>(s);
        while (v >= 0 && state[v] == 0) {
            state[v] = 1;
            walk.push_back(v);
            v = next[v];
        }
        if (v >= 0 && state[v] == 1) {  // closed within this walk
            bool in_cycle = false;
            for (long long w : walk) {
                if (w == v) in_cycle = true;
                if (in_cycle) cyclic[w] = true;
            }
        }
        for (long long w : walk) state[w] = 2;
    }
    return cyclic;
}

}  // namespace

ArrowDiagram arrow_diagram(const GridDims& dims, const GridPolicy& policy) {
    check_dims(dims);
    ArrowDiagram dg;
    dg.dims = dims;
    dg.mems = policy.mems;
    std::sort(dg.mems.begin(), dg.mems.end());
    dg.mems.erase(std::unique(dg.mems.begin(), dg.mems.end()), dg.mems.end());

    const long long n = vertex_count(dims);
    const long long m = static_cast<long long>(dg.mems.size());
    std::map<MemVal, long long> mem_slot;
    for (long long i = 0; i < m; ++i) mem_slot[dg.mems[i]] = i;

    std::vector<long long> next(n * m, -1);  // config -> config, -1 when broken
    for (long long vi = 0; vi < n; ++vi) {
        Position pos = position_at(dims, vi);
        SenseData sd = boundary_distances(dims, pos, policy.V);
        for (long long mi = 0; mi < m; ++mi) {
            ConfigArrow arrow;
            arrow.from = pos;
            arrow.mem_before = dg.mems[mi];
            try {
                Move mv = policy.eval(sd, dg.mems[mi]);
                arrow.to = pos;
                if (!is_zero(mv.step)) {
                    if (mv.step.axis < 1 || mv.step.axis > static_cast<int>(dims.size())) {
                        throw illegal_step_error("policy produced a malformed step");
                    }
                    arrow.to[mv.step.axis - 1] += mv.step.sign;
                }
                arrow.mem_after = mv.mem;
            } catch (const policy_undefined_error&) {
                continue;  // configuration has no arrow; functionality check reports it
            }
            if (in_bounds(dims, arrow.to)) {
                auto slot = mem_slot.find(arrow.mem_after);
                if (slot != mem_slot.end()) {
                    next[vi * m + mi] = linear_index(dims, arrow.to) * m + slot->second;
                }
            }
            dg.arrows.push_back(std::move(arrow));
        }
    }

    std::vector<bool> cyclic = on_cycle_flags(next);
    for (ConfigArrow& a : dg.arrows) {
        long long cfg = linear_index(dims, a.from) * m + mem_slot[a.mem_before];
        a.transient = !cyclic[cfg];
    }
    return dg;
}

bool diagram_is_functional(const ArrowDiagram& d) {
    const long long want = vertex_count(d.dims) * static_cast<long long>(d.mems.size());
    if (static_cast<long long>(d.arrows.size()) != want) return false;
    std::set<MemVal> mems(d.mems.begin(), d.mems.end());
    for (const ConfigArrow& a : d.arrows) {
        if (!in_bounds(d.dims, a.to)) return false;
        if (!mems.count(a.mem_after)) return false;
    }
    return true;
}

namespace {

std::string coord_label(const Position& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    s += ')';
    return s;
}

}  // namespace

std::string diagram_dot(const ArrowDiagram& d, bool include_transient) {
    std::ostringstream out;
    out << "digraph arrows {\n";
    out << "  node [shape=circle, fontsize=10];\n";
    const long long n = vertex_count(d.dims);
    for (long long i = 0; i < n; ++i) {
        out << "  n" << i << " [label=\"" << coord_label(position_at(d.dims, i)) << "\"];\n";
    }
    for (const ConfigArrow& a : d.arrows) {
        if (a.transient && !include_transient) continue;
        out << "  n" << linear_index(d.dims, a.from) << " -> n" << linear_index(d.dims, a.to)
            << " [color=" << mem_color(a.mem_before);
        if (a.mem_after != a.mem_before) out << ", label=\"" << a.mem_after << "\"";
        if (a.transient) out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

struct Pt {
    double x = 0;
    double y = 0;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

}  // namespace

std::string diagram_svg(const ArrowDiagram& d, bool include_transient) {
    const int dim = static_cast<int>(d.dims.size());
    if (dim > 3) throw std::domain_error("svg rendering supports at most 3 axes");
    const int n1 = d.dims[0];
    const int n2 = dim >= 2 ? d.dims[1] : 1;
    const int n3 = dim >= 3 ? d.dims[2] : 1;
    const double spacing = 60.0;
    const double depth_dx = 21.0, depth_dy = 21.0;  // oblique projection of axis 3
    const double margin = 40.0;

    auto project = [&](const Position& p) {
        int x1 = p[0], x2 = dim >= 2 ? p[1] : 1, x3 = dim >= 3 ? p[2] : 1;
        Pt pt;
        pt.x = margin + (x1 - 1) * spacing + (x3 - 1) * depth_dx;
        pt.y = margin + (n2 - x2) * spacing + (n3 - x3) * depth_dy;
        return pt;
    };

    const double width = 2 * margin + (n1 - 1) * spacing + (n3 - 1) * depth_dx;
    const double height = 2 * margin + (n2 - 1) * spacing + (n3 - 1) * depth_dy;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";

    // light grid edges underneath the arrows
    out << "  <g stroke=\"#cccccc\" stroke-width=\"1\">\n";
    const long long n = vertex_count(d.dims);
    for (long long i = 0; i < n; ++i) {
        Position p = position_at(d.dims, i);
        for (int ax = 0; ax < dim; ++ax) {
            if (p[ax] >= d.dims[ax]) continue;
            Position q = p;
            ++q[ax];
            Pt a = project(p), b = project(q);
            out << "    <line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\""
                << fmt(b.x) << "\" y2=\"" << fmt(b.y) << "\"/>\n";
        }
    }
    out << "  </g>\n";

    // arrows: body colored by the memory before the step, head by the memory
    // after; parallel arrows for different memories are nudged sideways
    const double node_r = 5.0;
    for (const ConfigArrow& a : d.arrows) {
        if (a.transient && !include_transient) continue;
        if (a.from == a.to) continue;  // stays are not drawn
        Pt p = project(a.from), q = project(a.to);
        double dx = q.x - p.x, dy = q.y - p.y;
        double len = std::sqrt(dx * dx + dy * dy);
        double ux = dx / len, uy = dy / len;   // unit along the arrow
        double px = -uy, py = ux;              // unit perpendicular
        long long slot = std::find(d.mems.begin(), d.mems.end(), a.mem_before) - d.mems.begin();
        double off = (static_cast<double>(slot) - (d.mems.size() - 1) / 2.0) * 5.0;
        double sx = p.x + ux * (node_r + 2) + px * off;
        double sy = p.y + uy * (node_r + 2) + py * off;
        double ex = q.x - ux * (node_r + 7) + px * off;
        double ey = q.y - uy * (node_r + 7) + py * off;
        out << "  <line x1=\"" << fmt(sx) << "\" y1=\"" << fmt(sy) << "\" x2=\"" << fmt(ex)
            << "\" y2=\"" << fmt(ey) << "\" stroke=\"" << mem_color(a.mem_before)
            << "\" stroke-width=\"2\"";
        if (a.transient) out << " stroke-dasharray=\"4 3\"";
        out << "/>\n";
        // triangular head
        double hx = ex + ux * 6, hy = ey + uy * 6;
        out << "  <polygon points=\"" << fmt(hx) << "," << fmt(hy) << " "
            << fmt(ex + px * 3.5) << "," << fmt(ey + py * 3.5) << " " << fmt(ex - px * 3.5)
            << "," << fmt(ey - py * 3.5) << "\" fill=\"" << mem_color(a.mem_after) << "\"/>\n";
    }

    // vertices on top
    out << "  <g fill=\"#222222\">\n";
    for (long long i = 0; i < n; ++i) {
        Pt pt = project(position_at(d.dims, i));
        out << "    <circle cx=\"" << fmt(pt.x) << "\" cy=\"" << fmt(pt.y) << "\" r=\""
            << fmt(node_r) << "\"/>\n";
    }
    out << "  </g>\n";
    out << "</svg>\n";
    return out.str();
}

std::string regions_dot(const RegionGraph& rg) {
    std::ostringstream out;
    out << "graph regions {\n";
    out << "  node [shape=box, fontsize=10];\n";
    for (size_t i = 0; i < rg.regions.size(); ++i) {
        out << "  r" << i << " [label=\"" << sense_key({rg.regions[i].key, rg.V}) << "\"];\n";
    }
    for (auto [a, b] : rg.edges) {
        out << "  r" << a << " -- r" << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace gridpatrol
