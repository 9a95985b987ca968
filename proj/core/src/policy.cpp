#include "gridpatrol/policy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gridpatrol/errors.hpp"

namespace gridpatrol {

int parity(int V, int n, int l, int r) {
    if (l < V) return l % 2;
    return (n - r + 1) % 2;
}

namespace {

// The memoryless constructions assume axes come longest-first. Callers pass
// axes in natural order, so we evaluate through a stable descending
// permutation and translate the chosen axis back at the end.
std::vector<int> axis_order(const GridDims& dims) {
    std::vector<int> ord(dims.size());
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(),
                     [&](int a, int b) { return dims[a] > dims[b]; });
    return ord;
}

void check_axes(const GridDims& dims, const SenseData& s) {
    if (s.axes.size() != dims.size()) {
        throw std::invalid_argument("sense data and grid dimension mismatch");
    }
}

}  // namespace

Step memoryless_v1(const GridDims& dims, const SenseData& s) {
    check_axes(dims, s);
    const int d = static_cast<int>(dims.size());
    const std::vector<int> ord = axis_order(dims);
    auto par = [&](int i) {  // parity of the i-th longest axis, i is 1-based
        int ax = ord[i - 1];
        return parity(s.V, dims[ax], s.axes[ax].l, s.axes[ax].r);
    };
    for (int j = 1; j <= d; ++j) {
        int down = 0;
        for (int i = j + 1; i <= d; ++i) down ^= par(i);
        const AxisSense& aj = s.axes[ord[j - 1]];
        if (down == 0 && aj.r > 0) return {ord[j - 1] + 1, +1};
        if (down == 1 && aj.l > 0) return {ord[j - 1] + 1, -1};
    }
    return {ord[d - 1] + 1, -1};
}

Step memoryless_vgt1(const GridDims& dims, const SenseData& s) {
    check_axes(dims, s);
    const int d = static_cast<int>(dims.size());
    const std::vector<int> ord = axis_order(dims);
    auto par = [&](int i) {
        int ax = ord[i - 1];
        return parity(s.V, dims[ax], s.axes[ax].l, s.axes[ax].r);
    };
    const AxisSense& a1 = s.axes[ord[0]];
    if (a1.l == 0) {
        // return pass along the x_1 = 1 strip
        for (int j = 2; j <= d; ++j) {
            int up = 0;
            for (int i = j + 1; i <= d; ++i) up ^= par(i);
            const AxisSense& aj = s.axes[ord[j - 1]];
            if (up == 0 && aj.l > 0) return {ord[j - 1] + 1, -1};
            if (up == 1 && aj.r > 0) return {ord[j - 1] + 1, +1};
        }
        return {ord[0] + 1, +1};
    }
    // zig-zag over everything with x_1 > 1
    for (int j = 1; j <= d; ++j) {
        int down = 0;
        for (int i = j + 1; i <= d; ++i) down ^= par(i);
        const AxisSense& aj = s.axes[ord[j - 1]];
        if (down == 0 && aj.r > 0) return {ord[j - 1] + 1, +1};
        if (down == 1 && aj.l > 0) {
            if (j == 1 && a1.l == 1) continue;  // stay off the return strip
            return {ord[j - 1] + 1, -1};
        }
    }
    return {ord[0] + 1, -1};
}

Move make_move_1d(const SenseData& s, MemVal mem) {
    Move out;
    out.mem = mem;
    if (mem == 0) {
        if (s.axes[0].r != 0) {
            out.step = {1, +1};
        } else {
            out.step = {1, -1};
            out.mem = 1;
        }
    } else {
        if (s.axes[0].l != 0) {
            out.step = {1, -1};
        } else {
            out.step = {1, +1};
            out.mem = 0;
        }
    }
    return out;
}

Move make_move_2d(const SenseData& s, MemVal mem) {
    const int l1 = s.axes[0].l, r1 = s.axes[0].r;
    const int l2 = s.axes[1].l, r2 = s.axes[1].r;
    Move out;
    out.mem = mem;
    bool fired = false;
    // sequential one-line ifs; a later match overwrites an earlier one
    if (mem == 0) {
        if (r1 != 0 && l2 != 0) { out.step = {1, +1}; fired = true; }
        if (l1 != 0 && l2 == 0) { out.step = {1, -1}; fired = true; }
        if (l1 == 0 && l2 == 0) { out.step = {2, +1}; fired = true; }
        if (r1 == 0 && l2 * r2 != 0) { out.step = {1, -1}; out.mem = 1; fired = true; }
        if (r1 == 0 && r2 == 0) { out.step = {2, -1}; out.mem = 1; fired = true; }
    } else {
        if (l1 == 0 && r2 != 0) { out.step = {2, +1}; out.mem = 0; fired = true; }
        if (l1 == 0 && r2 == 0) { out.step = {1, +1}; out.mem = 0; fired = true; }
        if (l1 * r1 != 0 && r2 != 0) { out.step = {1, -1}; fired = true; }
        if (l1 * r1 != 0 && r2 == 0) { out.step = {1, +1}; fired = true; }
        if (r1 == 0 && l2 == 0) { out.step = {1, -1}; out.mem = 0; fired = true; }
        if (r1 == 0 && l2 != 0) { out.step = {2, -1}; fired = true; }
    }
    if (!fired) throw policy_undefined_error("two-axis move undefined for this input");
    return out;
}

Move make_move_3d(const SenseData& s, MemVal mem) {
    const auto& a = s.axes;
    if (a[0].l == 0 && a[1].r == 0 && mem == 0) {
        Move out;
        out.step = (a[2].r == 0) ? Step{1, +1} : Step{3, +1};
        out.mem = 1;
        return out;
    }
    if (a[0].l != 0 && a[2].l != 0 && a[1].r == 0 && mem == 1) {
        return {{3, -1}, mem};
    }
    return make_move_2d(s, mem);
}

Move make_move_kd(const SenseData& s, MemVal mem, int k) {
    if (k < 3) throw std::invalid_argument("make_move_kd needs k >= 3");
    if (static_cast<int>(s.axes.size()) < k + 1) {
        throw std::invalid_argument("make_move_kd needs at least k+1 axes");
    }
    const auto& a = s.axes;
    bool guard = (mem == 1) && (a[k - 1].r == 0);
    for (int j = 2; guard && j <= k - 1; ++j) guard = (a[j - 1].l == 0);
    if (guard) {
        if (a[0].r == 0) {
            Move out;
            out.mem = mem;
            if (a[k].r == 0) {
                out.step = {1, -1};
            } else {
                out.step = {k + 1, +1};
                out.mem = 0;
            }
            return out;
        }
        if (a[k].l != 0) {
            return {{k + 1, -1}, mem};
        }
    }
    return (k == 3) ? make_move_3d(s, mem) : make_move_kd(s, mem, k - 1);
}

namespace {

void check_one_bit_mem(MemVal mem) {
    if (mem != 0 && mem != 1) {
        throw policy_undefined_error("one-bit policy has no rule for memory value " +
                                     std::to_string(mem));
    }
}

}  // namespace

Move make_move_all(const SenseData& s, MemVal mem) {
    const int d = static_cast<int>(s.axes.size());
    if (d < 1) throw std::invalid_argument("need at least one axis");
    check_one_bit_mem(mem);
    if (d == 1) return make_move_1d(s, mem);
    if (d == 2) return make_move_2d(s, mem);
    if (d == 3) return make_move_3d(s, mem);
    return make_move_kd(s, mem, d - 1);
}

Move make_move_noninductive(const SenseData& s, MemVal mem) {
    const int d = static_cast<int>(s.axes.size());
    if (d < 1) throw std::invalid_argument("need at least one axis");
    check_one_bit_mem(mem);
    if (d == 1) return make_move_1d(s, mem);
    if (d == 2) return make_move_2d(s, mem);
    const auto& a = s.axes;
    if (mem == 0 && a[0].l == 0 && a[1].r == 0) {
        Move out;
        out.step = (a[2].r == 0) ? Step{1, +1} : Step{3, +1};
        out.mem = 1;
        return out;
    }
    if (mem == 1) {
        int k = d + 1;  // sentinel: no axis past the 2nd is off its low wall
        for (int j = 3; j <= d; ++j) {
            if (a[j - 1].l > 0) {
                k = j;
                break;
            }
        }
        const bool move_up = (a[0].r == 0 && a[1].l == 0);
        if (move_up && k < d && a[k - 1].r == 0) {
            Move out;
            out.mem = mem;
            if (a[k].r == 0) {
                out.step = {1, -1};
            } else {
                out.step = {k + 1, +1};
                out.mem = 0;
            }
            return out;
        }
        if (a[0].l != 0 && a[1].r == 0) {
            if (a[2].l != 0) return {{3, -1}, mem};
            return make_move_2d(s, mem);
        }
        const bool move_down = (a[0].r != 0 && a[1].l == 0);
        if (move_down && k < d && a[k - 1].r == 0) {
            if (a[k].l != 0) return {{k + 1, -1}, mem};
            return make_move_2d(s, mem);
        }
    }
    return make_move_2d(s, mem);
}

GridPolicy policy_memoryless_v1(const GridDims& dims) {
    check_dims(dims);
    GridPolicy p;
    p.name = "memoryless";
    p.V = 1;
    p.mems = {0};
    p.eval = [dims](const SenseData& s, MemVal) {
        return Move{memoryless_v1(dims, s), 0};
    };
    return p;
}

GridPolicy policy_memoryless_vgt1(const GridDims& dims, int V) {
    check_dims(dims);
    if (V < 2) throw std::invalid_argument("this construction needs sensing range >= 2");
    GridPolicy p;
    p.name = "memoryless-vgt1";
    p.V = V;
    p.mems = {0};
    p.eval = [dims](const SenseData& s, MemVal) {
        return Move{memoryless_vgt1(dims, s), 0};
    };
    return p;
}

GridPolicy policy_make_move() {
    GridPolicy p;
    p.name = "makemove";
    p.V = 1;
    p.mems = {0, 1};
    p.eval = [](const SenseData& s, MemVal mem) { return make_move_all(s, mem); };
    return p;
}

GridPolicy policy_make_move_noninductive() {
    GridPolicy p;
    p.name = "noninductive";
    p.V = 1;
    p.mems = {0, 1};
    p.eval = [](const SenseData& s, MemVal mem) { return make_move_noninductive(s, mem); };
    return p;
}

}  // namespace gridpatrol
