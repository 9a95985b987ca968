#include "gridpatrol/simulate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <utility>

#include "gridpatrol/errors.hpp"

namespace gridpatrol {

namespace {

struct Stepped {
    Position pos;
    MemVal mem;
    bool stayed;
};

Stepped apply_policy(const GridDims& dims, const GridPolicy& policy, const Position& pos,
                     MemVal mem) {
    SenseData sd = boundary_distances(dims, pos, policy.V);
    Move mv = policy.eval(sd, mem);
    if (is_zero(mv.step)) {
        if (!policy.may_stay) throw zero_step_error("policy produced no movement");
        return {pos, mv.mem, true};
    }
    const int d = static_cast<int>(dims.size());
    if (mv.step.axis < 1 || mv.step.axis > d || (mv.step.sign != 1 && mv.step.sign != -1)) {
        throw illegal_step_error("policy produced a malformed step");
    }
    Position np = pos;
    np[mv.step.axis - 1] += mv.step.sign;
    if (!in_bounds(dims, np)) throw illegal_step_error("policy stepped off the grid");
    return {std::move(np), mv.mem, false};
}

// target vertex set as a bitmap over linear indices; empty optional means all
std::vector<bool> target_bitmap(const GridDims& dims, const Target& target,
                                const Position& start) {
    const long long n = vertex_count(dims);
    std::vector<bool> want(n, false);
    switch (target.kind) {
        case Target::Kind::All:
            want.assign(n, true);
            break;
        case Target::Kind::FloorOfStart: {
            const int d = static_cast<int>(dims.size());
            if (target.k < 1 || target.k > d) {
                throw std::domain_error("floor index k out of range");
            }
            FloorSpec f = floor_of(dims, start, target.k);
            for (long long i = 0; i < n; ++i) {
                if (floor_contains(f, position_at(dims, i))) want[i] = true;
            }
            break;
        }
        case Target::Kind::Vertices:
            for (const Position& p : target.verts) {
                if (!in_bounds(dims, p)) {
                    throw std::domain_error("target vertex out of bounds");
                }
                want[linear_index(dims, p)] = true;
            }
            break;
    }
    return want;
}

}  // namespace

Trace run(const GridDims& dims, const GridPolicy& policy, const AgentState& start,
          long long max_steps, const Target& target) {
    check_dims(dims);
    if (!in_bounds(dims, start.pos)) throw std::domain_error("start position out of bounds");
    if (max_steps < 0) throw std::invalid_argument("max_steps must be >= 0");

    std::vector<bool> want = target_bitmap(dims, target, start.pos);
    long long want_left = static_cast<long long>(std::count(want.begin(), want.end(), true));

    Trace tr;
    Position pos = start.pos;
    MemVal mem = start.mem;
    std::map<std::pair<long long, MemVal>, long long> seen_at;
    seen_at[{linear_index(dims, pos), mem}] = 0;
    tr.states.push_back({0, pos, mem, false});
    if (long long idx = linear_index(dims, pos); want[idx]) {
        want[idx] = false;
        --want_left;
    }
    if (want_left == 0) tr.cover_time = 0;

    for (long long t = 1; t <= max_steps; ++t) {
        Stepped next = apply_policy(dims, policy, pos, mem);
        pos = std::move(next.pos);
        mem = next.mem;
        long long idx = linear_index(dims, pos);
        auto [it, fresh] = seen_at.insert({{idx, mem}, t});
        tr.states.push_back({t, pos, mem, next.stayed});
        if (want[idx]) {
            want[idx] = false;
            if (--want_left == 0 && !tr.cover_time) tr.cover_time = t;
        }
        if (!fresh) {  // configuration repeated; everything after is periodic
            tr.cycle_start = it->second;
            tr.cycle_len = t - it->second;
            break;
        }
    }
    return tr;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        default: return "INCONCLUSIVE";
    }
}

namespace {

struct StartOutcome {
    Verdict verdict = Verdict::Pass;
    long long cover_time = -1;
    std::string reason;
};

StartOutcome run_one_start(const GridDims& dims, const GridPolicy& policy,
                           const Target& target, long long budget, const AgentState& start) {
    StartOutcome out;
    std::vector<bool> want = target_bitmap(dims, target, start.pos);
    long long want_left = static_cast<long long>(std::count(want.begin(), want.end(), true));
    const unsigned long long n = static_cast<unsigned long long>(vertex_count(dims));

    Position pos = start.pos;
    MemVal mem = start.mem;
    std::unordered_set<unsigned long long> seen;
    auto config = [n](long long idx, MemVal m) {
        return static_cast<unsigned long long>(m) * n + static_cast<unsigned long long>(idx);
    };
    seen.insert(config(linear_index(dims, pos), mem));
    if (long long idx = linear_index(dims, pos); want[idx]) {
        want[idx] = false;
        --want_left;
    }
    if (want_left == 0) {
        out.cover_time = 0;
        return out;
    }

    try {
        for (long long t = 1; t <= budget; ++t) {
            Stepped next = apply_policy(dims, policy, pos, mem);
            pos = std::move(next.pos);
            mem = next.mem;
            long long idx = linear_index(dims, pos);
            if (want[idx]) {
                want[idx] = false;
                if (--want_left == 0) {
                    out.cover_time = t;
                    return out;
                }
            }
            if (!seen.insert(config(idx, mem)).second) {
                out.verdict = Verdict::Fail;
                out.reason = "cycle closed before covering the target";
                return out;
            }
        }
    } catch (const policy_undefined_error& e) {
        out.verdict = Verdict::Fail;
        out.reason = e.what();
        return out;
    } catch (const illegal_step_error& e) {
        out.verdict = Verdict::Fail;
        out.reason = e.what();
        return out;
    } catch (const zero_step_error& e) {
        out.verdict = Verdict::Fail;
        out.reason = e.what();
        return out;
    }
    out.verdict = Verdict::Inconclusive;
    out.reason = "budget exhausted before covering the target";
    return out;
}

}  // namespace

VerifyReport verify_patrols(const GridDims& dims, const GridPolicy& policy,
                            const Target& target, long long budget, int jobs) {
    check_dims(dims);
    if (budget < 0) throw std::invalid_argument("budget must be >= 0");

    std::vector<AgentState> starts;
    const long long n = vertex_count(dims);
    for (long long i = 0; i < n; ++i) {
        for (MemVal m : policy.mems) starts.push_back({position_at(dims, i), m});
    }

    std::vector<StartOutcome> outcomes(starts.size());
    int workers = std::max(1, std::min<int>(jobs, static_cast<int>(starts.size())));
    if (workers == 1) {
        for (size_t i = 0; i < starts.size(); ++i) {
            outcomes[i] = run_one_start(dims, policy, target, budget, starts[i]);
        }
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (size_t i = w; i < starts.size(); i += workers) {
                        outcomes[i] = run_one_start(dims, policy, target, budget, starts[i]);
                    }
                } catch (...) {
                    errs[w] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errs) {
            if (e) std::rethrow_exception(e);
        }
    }

    VerifyReport rep;
    rep.budget = budget;
    for (size_t i = 0; i < starts.size(); ++i) {
        const StartOutcome& o = outcomes[i];
        if (o.verdict == Verdict::Pass) {
            rep.worst_cover_time = std::max(rep.worst_cover_time, o.cover_time);
        } else {
            if (o.verdict == Verdict::Fail) {
                rep.verdict = Verdict::Fail;
            } else if (rep.verdict == Verdict::Pass) {
                rep.verdict = Verdict::Inconclusive;
            }
            rep.failures.push_back({starts[i], o.reason});
        }
    }
    return rep;
}

CycleCheck induced_cycle_check(const Trace& trace, const GridDims& dims) {
    CycleCheck cc;
    std::map<long long, long long> first_seen;
    for (const TraceRec& rec : trace.states) {
        long long idx = linear_index(dims, rec.pos);
        auto [it, fresh] = first_seen.insert({idx, rec.t});
        if (!fresh) {
            cc.conclusive = true;
            cc.length = rec.t - it->second;
            cc.is_hamiltonian_cycle = (it->second == 0 && cc.length == vertex_count(dims));
            return cc;
        }
    }
    return cc;
}

std::vector<FloorVisit> floor_entry_audit(const Trace& trace, const GridDims& dims, int k) {
    const int d = static_cast<int>(dims.size());
    if (k < 1 || k >= d) throw std::domain_error("floor audit needs 1 <= k < d");
    const GridDims floor_dims(dims.begin(), dims.begin() + k);
    const long long floor_verts = vertex_count(floor_dims);

    std::vector<FloorVisit> out;
    size_t i = 0;
    while (i < trace.states.size()) {
        const Position& entry_pos = trace.states[i].pos;
        std::vector<int> upper(entry_pos.begin() + k, entry_pos.end());
        FloorVisit fv;
        fv.entry = {entry_pos, trace.states[i].mem};
        fv.floor_coords = upper;
        std::set<long long> cells;
        size_t j = i;
        for (; j < trace.states.size(); ++j) {
            const Position& p = trace.states[j].pos;
            if (!std::equal(p.begin() + k, p.end(), upper.begin())) break;
            cells.insert(linear_index(floor_dims, Position(p.begin(), p.begin() + k)));
        }
        fv.fully_covered = static_cast<long long>(cells.size()) == floor_verts;
        out.push_back(std::move(fv));
        i = j;
    }
    return out;
}

}  // namespace gridpatrol
