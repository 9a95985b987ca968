#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gridpatrol/grid.hpp"

namespace gridpatrol {

// A unit move along one axis. axis is 1-based; axis == 0 means no movement,
// which simulators treat as an error unless the policy is allowed to stay.
struct Step {
    int axis = 0;
    int sign = 0;
    friend bool operator==(const Step& a, const Step& b) {
        return a.axis == b.axis && a.sign == b.sign;
    }
};

inline bool is_zero(const Step& s) { return s.axis == 0; }

// Memory values are small non-negative integers; 64 bits so that instrumented
// multi-field machine states (the direction-sequence patroller) fit too.
using MemVal = long long;

// One policy evaluation: the step to take and the memory to carry forward.
struct Move {
    Step step;
    MemVal mem = 0;
    friend bool operator==(const Move& a, const Move& b) {
        return a.step == b.step && a.mem == b.mem;
    }
};

// Parity subroutine of the memoryless constructions: which direction the sweep
// should run along an axis, recovered from one boundary-distance pair.
int parity(int V, int n, int l, int r);

// Memoryless V=1 construction. Zig-zag sweep; axes are evaluated in descending
// length order (stable), per the constructions' n_1 >= ... >= n_d assumption,
// and the chosen step is mapped back to the caller's axis numbering.
Step memoryless_v1(const GridDims& dims, const SenseData& s);

// Memoryless V>=2 construction: returns along the x_1 = 1 strip, zig-zags over
// the rest, skipping the strip on the way down. Same axis-ordering handling.
Step memoryless_vgt1(const GridDims& dims, const SenseData& s);

// 1-bit, V=1 family. These never read dimension sizes and may be run on inputs
// with more axes than they patrol (they ignore the extra axes).
Move make_move_1d(const SenseData& s, MemVal mem);
Move make_move_2d(const SenseData& s, MemVal mem);
Move make_move_3d(const SenseData& s, MemVal mem);

// The (k+1)-axis recursive construction, k >= 3; recursion bottoms out at
// make_move_3d (the 3-axis designated states differ structurally).
Move make_move_kd(const SenseData& s, MemVal mem, int k);

// Dispatch by the number of axes in s: 1 -> 1d, 2 -> 2d, 3 -> 3d,
// d >= 4 -> make_move_kd with k = d-1.
Move make_move_all(const SenseData& s, MemVal mem);

// Single-pass form of make_move_all (no recursion). Dispatches d <= 2 to the
// 1-D/2-D algorithms; pointwise equal to make_move_all everywhere.
Move make_move_noninductive(const SenseData& s, MemVal mem);

// What the simulator runs: a named, immutable policy over grid sensing data.
// mems lists the start memory values a verification sweep must try.
struct GridPolicy {
    std::string name;
    int V = 1;
    std::vector<MemVal> mems = {0};
    bool may_stay = false;
    std::function<Move(const SenseData&, MemVal)> eval;
};

GridPolicy policy_memoryless_v1(const GridDims& dims);
GridPolicy policy_memoryless_vgt1(const GridDims& dims, int V);
GridPolicy policy_make_move();
GridPolicy policy_make_move_noninductive();

}  // namespace gridpatrol
