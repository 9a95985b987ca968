#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridpatrol/grid.hpp"
#include "gridpatrol/policy.hpp"

namespace gridpatrol {

struct AgentState {
    Position pos;
    MemVal mem = 0;
};

struct TraceRec {
    long long t = 0;
    Position pos;
    MemVal mem = 0;
    bool stay = false;  // only direction-sequence runs ever stay
};

// Timestamped walk of (position, memory) states. cover_time is the first step
// index at which every target vertex has been visited (the start counts as
// visited at step 0). The cycle fields are set when some (position, memory)
// configuration repeats; runs stop there since the continuation is periodic.
struct Trace {
    std::vector<TraceRec> states;
    std::optional<long long> cover_time;
    std::optional<long long> cycle_start;
    std::optional<long long> cycle_len;
};

// What a run must visit. FloorOfStart freezes coordinates above k to the start
// vertex's, so a sweep can check floor-locality from every start.
struct Target {
    enum class Kind { All, FloorOfStart, Vertices } kind = Kind::All;
    int k = 0;                     // FloorOfStart
    std::vector<Position> verts;   // Vertices
};

// Run one agent. Stops at max_steps, at full coverage plus cycle closure, or
// at the first repeated configuration. Policy misbehavior throws
// (policy_undefined_error, illegal_step_error, zero_step_error).
Trace run(const GridDims& dims, const GridPolicy& policy, const AgentState& start,
          long long max_steps, const Target& target = {});

enum class Verdict { Pass, Fail, Inconclusive };
const char* verdict_name(Verdict v);

struct VerifyFailure {
    AgentState start;
    std::string reason;
};

struct VerifyReport {
    Verdict verdict = Verdict::Pass;
    long long worst_cover_time = -1;
    long long budget = 0;
    std::vector<VerifyFailure> failures;
};

// Run from every (vertex, start-memory) pair. PASS iff every run covers its
// target within the budget. A run that repeats a configuration before covering
// has provably failed (FAIL); a run that merely exhausts the budget is
// INCONCLUSIVE. jobs > 1 distributes starts across threads; the report is
// independent of jobs.
VerifyReport verify_patrols(const GridDims& dims, const GridPolicy& policy,
                            const Target& target, long long budget, int jobs = 1);

// For 0-bit policies: does the trace's orbit close into a cycle through its
// start that visits every vertex exactly once, with length = vertex count?
struct CycleCheck {
    bool conclusive = false;       // false: trace too short to repeat a vertex
    bool is_hamiltonian_cycle = false;
    long long length = 0;          // cycle length when conclusive
};
CycleCheck induced_cycle_check(const Trace& trace, const GridDims& dims);

// Segments a trace at changes of the coordinates above axis k and reports, per
// segment, whether the k-floor was fully visited before the trace left it.
// Instruments the inductive correctness argument of the 1-bit construction.
struct FloorVisit {
    AgentState entry;              // first state of the segment
    std::vector<int> floor_coords; // q_{k+1}..q_d
    bool fully_covered = false;
};
// throws std::domain_error unless 1 <= k < d
std::vector<FloorVisit> floor_entry_audit(const Trace& trace, const GridDims& dims, int k);

}  // namespace gridpatrol
