#include "gridpatrol/env.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "gridpatrol/errors.hpp"
#include "ham_cycle.hpp"

namespace gridpatrol {

int Environment::index_of(const Position& p) const {
    auto it = std::lower_bound(verts.begin(), verts.end(), p);
    if (it == verts.end() || *it != p) return -1;
    return static_cast<int>(it - verts.begin());
}

Environment env_from_coords(std::vector<Position> coords) {
    if (coords.empty()) throw std::invalid_argument("environment needs at least one vertex");
    const size_t d = coords.front().size();
    if (d == 0) throw std::invalid_argument("vertices need at least one coordinate");
    for (const Position& p : coords) {
        if (p.size() != d) throw std::invalid_argument("vertices with mixed dimensions");
    }
    std::sort(coords.begin(), coords.end());
    if (std::adjacent_find(coords.begin(), coords.end()) != coords.end()) {
        throw std::invalid_argument("duplicate vertex");
    }

    Environment env;
    env.d = static_cast<int>(d);
    env.verts = std::move(coords);
    env.adj.resize(env.verts.size());
    for (size_t i = 0; i < env.verts.size(); ++i) {
        Position p = env.verts[i];
        for (size_t ax = 0; ax < d; ++ax) {
            for (int sgn : {-1, +1}) {
                p[ax] += sgn;
                if (int j = env.index_of(p); j >= 0) env.adj[i].push_back(j);
                p[ax] -= sgn;
            }
        }
        std::sort(env.adj[i].begin(), env.adj[i].end());
    }

    std::vector<char> reach(env.verts.size(), 0);
    std::deque<int> q{0};
    reach[0] = 1;
    size_t count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int u : env.adj[v]) {
            if (!reach[u]) {
                reach[u] = 1;
                ++count;
                q.push_back(u);
            }
        }
    }
    if (count != env.verts.size()) throw std::invalid_argument("environment is disconnected");
    return env;
}

Environment env_load_text(const std::string& text) {
    std::vector<Position> coords;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        // tolerate blank and whitespace-only lines
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        Position p;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) {
            try {
                size_t used = 0;
                p.push_back(std::stoi(tok, &used));
                if (tok.find_first_not_of(" \t\r\n", used) != std::string::npos) {
                    throw std::invalid_argument("junk");
                }
            } catch (const std::exception&) {
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": bad coordinate '" + tok + "'");
            }
        }
        if (p.empty()) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": empty tuple");
        }
        coords.push_back(std::move(p));
    }
    return env_from_coords(std::move(coords));
}

Environment env_load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open environment file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return env_load_text(buf.str());
}

Environment env_grid(const GridDims& dims) {
    check_dims(dims);
    std::vector<Position> coords;
    const long long n = vertex_count(dims);
    coords.reserve(n);
    for (long long i = 0; i < n; ++i) coords.push_back(position_at(dims, i));
    return env_from_coords(std::move(coords));
}

Environment env_grid_with_hole(int nx, int ny, int hx0, int hy0, int hx1, int hy1) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("grid sides must be >= 2");
    if (hx0 == 0) {  // default: knock out the single center cell
        hx0 = hx1 = (nx + 1) / 2;
        hy0 = hy1 = (ny + 1) / 2;
    }
    if (hx0 < 1 || hy0 < 1 || hx1 > nx || hy1 > ny || hx0 > hx1 || hy0 > hy1) {
        throw std::invalid_argument("hole rectangle out of range");
    }
    std::vector<Position> coords;
    for (int y = 1; y <= ny; ++y) {
        for (int x = 1; x <= nx; ++x) {
            if (x >= hx0 && x <= hx1 && y >= hy0 && y <= hy1) continue;
            coords.push_back({x, y});
        }
    }
    return env_from_coords(std::move(coords));
}

Environment env_l_shape(int a, int b, int c, int d) {
    if (a < 1 || b < 1 || c < 1 || d < 1) throw std::invalid_argument("block sides must be >= 1");
    std::vector<Position> coords;
    for (int y = 1; y <= std::max(b, d); ++y) {
        for (int x = 1; x <= std::max(a, c); ++x) {
            if ((x <= a && y <= b) || (x <= c && y <= d)) coords.push_back({x, y});
        }
    }
    return env_from_coords(std::move(coords));
}

int env_diameter(const Environment& env) {
    const int n = static_cast<int>(env.verts.size());
    int diam = 0;
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            diam = std::max(diam, dist[v]);
            for (int u : env.adj[v]) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    q.push_back(u);
                }
            }
        }
    }
    return diam;
}

EnvSense env_sense(const Environment& env, const Position& p, int V) {
    if (V < 1) throw std::invalid_argument("sensing range must be >= 1");
    if (env.index_of(p) < 0) throw std::domain_error("position not in the environment");
    EnvSense s;
    s.d = env.d;
    s.V = V;
    for (const Position& q : env.verts) {
        int dist = 0;
        for (int i = 0; i < env.d && dist <= V; ++i) dist += std::abs(q[i] - p[i]);
        if (dist > V) continue;
        Position off(env.d);
        for (int i = 0; i < env.d; ++i) off[i] = q[i] - p[i];
        s.offsets.push_back(std::move(off));
    }
    std::sort(s.offsets.begin(), s.offsets.end());
    return s;
}

std::string env_sense_key(const EnvSense& s) {
    std::string key;
    for (const Position& off : s.offsets) {
        key += '(';
        for (size_t i = 0; i < off.size(); ++i) {
            if (i) key += ',';
            key += std::to_string(off[i]);
        }
        key += ')';
    }
    return key;
}

EnvPolicy env_policy_from_table(TablePolicy t, int V) {
    if (!t.uses_offset_keys()) {
        throw std::invalid_argument("environment policies need offset-set sense keys");
    }
    EnvPolicy p;
    p.name = "table";
    p.V = V;
    p.mems = t.mem_values();
    if (p.mems.empty()) p.mems = {0};
    auto shared = std::make_shared<TablePolicy>(std::move(t));
    p.eval = [shared](const EnvSense& s, MemVal mem) {
        return shared->eval(env_sense_key(s), mem);
    };
    return p;
}

namespace {

struct EnvStepped {
    int vert;
    MemVal mem;
    bool stayed;
};

EnvStepped apply_env_policy(const Environment& env, const EnvPolicy& policy, int vert,
                            MemVal mem) {
    EnvSense sd = env_sense(env, env.verts[vert], policy.V);
    Move mv = policy.eval(sd, mem);
    if (is_zero(mv.step)) {
        if (!policy.may_stay) throw zero_step_error("policy produced no movement");
        return {vert, mv.mem, true};
    }
    if (mv.step.axis < 1 || mv.step.axis > env.d ||
        (mv.step.sign != 1 && mv.step.sign != -1)) {
        throw illegal_step_error("policy produced a malformed step");
    }
    Position np = env.verts[vert];
    np[mv.step.axis - 1] += mv.step.sign;
    int nv = env.index_of(np);
    if (nv < 0) throw illegal_step_error("policy stepped out of the environment");
    return {nv, mv.mem, false};
}

}  // namespace

Trace run_env(const Environment& env, const EnvPolicy& policy, const AgentState& start,
              long long max_steps, std::unordered_set<MemVal>* states_seen) {
    int vert = env.index_of(start.pos);
    if (vert < 0) throw std::domain_error("start position not in the environment");
    if (max_steps < 0) throw std::invalid_argument("max_steps must be >= 0");

    const long long n = static_cast<long long>(env.verts.size());
    std::vector<char> covered(n, 0);
    long long covered_count = 0;

    Trace tr;
    MemVal mem = start.mem;
    if (states_seen) states_seen->insert(mem);
    std::map<std::pair<int, MemVal>, long long> seen_at;
    seen_at[{vert, mem}] = 0;
    tr.states.push_back({0, env.verts[vert], mem, false});
    covered[vert] = 1;
    ++covered_count;
    if (covered_count == n) tr.cover_time = 0;

    for (long long t = 1; t <= max_steps; ++t) {
        EnvStepped next = apply_env_policy(env, policy, vert, mem);
        vert = next.vert;
        mem = next.mem;
        if (states_seen) states_seen->insert(mem);
        auto [it, fresh] = seen_at.insert({{vert, mem}, t});
        tr.states.push_back({t, env.verts[vert], mem, next.stayed});
        if (!covered[vert]) {
            covered[vert] = 1;
            if (++covered_count == n && !tr.cover_time) tr.cover_time = t;
        }
        if (!fresh) {
            tr.cycle_start = it->second;
            tr.cycle_len = t - it->second;
            break;
        }
    }
    return tr;
}

namespace {

struct EnvOutcome {
    Verdict verdict = Verdict::Pass;
    long long cover_time = -1;
    std::string reason;
};

EnvOutcome run_one_env_start(const Environment& env, const EnvPolicy& policy, long long budget,
                             int start_vert, MemVal start_mem) {
    EnvOutcome out;
    const long long n = static_cast<long long>(env.verts.size());
    std::vector<char> covered(n, 0);
    long long covered_count = 1;
    covered[start_vert] = 1;
    if (covered_count == n) {
        out.cover_time = 0;
        return out;
    }

    int vert = start_vert;
    MemVal mem = start_mem;
    std::unordered_set<unsigned long long> seen;
    auto config = [n](int v, MemVal m) {
        return static_cast<unsigned long long>(m) * static_cast<unsigned long long>(n) +
               static_cast<unsigned long long>(v);
    };
    seen.insert(config(vert, mem));

    try {
        for (long long t = 1; t <= budget; ++t) {
            EnvStepped next = apply_env_policy(env, policy, vert, mem);
            vert = next.vert;
            mem = next.mem;
            if (!covered[vert]) {
                covered[vert] = 1;
                if (++covered_count == n) {
                    out.cover_time = t;
                    return out;
                }
            }
            if (!seen.insert(config(vert, mem)).second) {
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

VerifyReport verify_patrols_env(const Environment& env, const EnvPolicy& policy,
                                long long budget, int jobs) {
    if (budget < 0) throw std::invalid_argument("budget must be >= 0");
    struct StartRef {
        int vert;
        MemVal mem;
    };
    std::vector<StartRef> starts;
    for (size_t v = 0; v < env.verts.size(); ++v) {
        for (MemVal m : policy.mems) starts.push_back({static_cast<int>(v), m});
    }

    std::vector<EnvOutcome> outcomes(starts.size());
    int workers = std::max(1, std::min<int>(jobs, static_cast<int>(starts.size())));
    if (workers == 1) {
        for (size_t i = 0; i < starts.size(); ++i) {
            outcomes[i] = run_one_env_start(env, policy, budget, starts[i].vert, starts[i].mem);
        }
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (size_t i = w; i < starts.size(); i += workers) {
                        outcomes[i] =
                            run_one_env_start(env, policy, budget, starts[i].vert, starts[i].mem);
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
        const EnvOutcome& o = outcomes[i];
        if (o.verdict == Verdict::Pass) {
            rep.worst_cover_time = std::max(rep.worst_cover_time, o.cover_time);
        } else {
            if (o.verdict == Verdict::Fail) {
                rep.verdict = Verdict::Fail;
            } else if (rep.verdict == Verdict::Pass) {
                rep.verdict = Verdict::Inconclusive;
            }
            rep.failures.push_back({{env.verts[starts[i].vert], starts[i].mem}, o.reason});
        }
    }
    return rep;
}

namespace {

int ceil_log2(long long x) {
    int b = 0;
    while ((1LL << b) < x) ++b;
    return b;
}

}  // namespace

int DirSeq::state_bits_bound() const {
    return diam * ceil_log2(2LL * d) + diam + ceil_log2(2LL * diam) + 2;
}

long long DirSeq::coverage_budget() const { return num_sequences * steps_per_sequence; }

EnvPolicy DirSeq::policy() const {
    EnvPolicy p;
    p.name = "dirseq";
    p.V = 1;
    p.mems = {0};
    p.may_stay = true;
    if (diam == 0) {  // single vertex; nowhere to go
        p.eval = [](const EnvSense&, MemVal) { return Move{{0, 0}, 0}; };
        return p;
    }
    const int d_ = d;
    const int diam_ = diam;
    const long long num_seq = num_sequences;
    p.eval = [d_, diam_, num_seq](const EnvSense& s, MemVal mem) {
        const long long two_diam = 2LL * diam_;
        const long long succ_space = 1LL << diam_;
        long long c = mem % two_diam;
        long long rest = mem / two_diam;
        long long succ = rest % succ_space;
        long long seq = rest / succ_space;

        auto digit = [&](int i) {  // i-th direction of the sequence, leftmost first
            long long div = 1;
            for (int j = 0; j < diam_ - 1 - i; ++j) div *= 2 * d_;
            return static_cast<int>((seq / div) % (2 * d_));
        };
        auto offset_present = [&](const Step& st) {
            Position off(static_cast<size_t>(d_), 0);
            off[st.axis - 1] = st.sign;
            return std::binary_search(s.offsets.begin(), s.offsets.end(), off);
        };

        Move out;
        if (c < diam_) {
            int q = digit(static_cast<int>(c));
            Step st{q / 2 + 1, (q % 2 == 0) ? -1 : +1};
            if (offset_present(st)) {  // execute the move, remember it succeeded
                out.step = st;
                succ |= (1LL << c);
            }
            ++c;
        } else {
            int idx = static_cast<int>(two_diam - 1 - c);
            if (succ & (1LL << idx)) {  // undo move idx on the way back
                int q = digit(idx);
                out.step = {q / 2 + 1, (q % 2 == 0) ? +1 : -1};
            }
            if (++c == two_diam) {  // next sequence
                c = 0;
                succ = 0;
                seq = (seq + 1) % num_seq;
            }
        }
        out.mem = (seq * succ_space + succ) * two_diam + c;
        return out;
    };
    return p;
}

DirSeq dirseq_patroller(const Environment& env) {
    DirSeq ds;
    ds.d = env.d;
    ds.diam = env_diameter(env);
    ds.steps_per_sequence = 2LL * ds.diam;
    ds.num_sequences = 1;
    const long long limit = 1LL << 62;
    for (int i = 0; i < ds.diam; ++i) {
        if (ds.num_sequences > limit / (2 * ds.d)) {
            throw resource_error("direction-sequence machine state exceeds 64 bits");
        }
        ds.num_sequences *= 2 * ds.d;
    }
    if (ds.diam > 0 && ds.state_bits_bound() > 64) {
        throw resource_error("direction-sequence machine state exceeds 64 bits");
    }
    return ds;
}

std::optional<std::vector<Position>> hamiltonian_search_env(const Environment& env,
                                                            long long cap) {
    const long long n = static_cast<long long>(env.verts.size());
    if (n > cap) {
        throw resource_error("environment has " + std::to_string(n) +
                             " vertices, over the search cap of " + std::to_string(cap));
    }
    auto found = detail::ham_cycle(env.adj);
    if (!found) return std::nullopt;
    std::vector<Position> cycle;
    cycle.reserve(found->size());
    for (int idx : *found) cycle.push_back(env.verts[idx]);
    return cycle;
}

std::optional<TablePolicy> full_visibility_hamiltonian(const Environment& env, long long cap) {
    auto cycle = hamiltonian_search_env(env, cap);
    if (!cycle) return std::nullopt;
    const int V = env_diameter(env);
    // with V = diam every vertex sees the whole environment, so offset-set
    // keys identify vertices uniquely and one direction per vertex suffices
    TablePolicy t;
    const size_t len = cycle->size();
    for (size_t i = 0; i < len; ++i) {
        const Position& from = (*cycle)[i];
        const Position& to = (*cycle)[(i + 1) % len];
        TableEntry e;
        e.key = env_sense_key(env_sense(env, from, V));
        for (int ax = 0; ax < env.d; ++ax) {
            if (to[ax] != from[ax]) {
                e.step.axis = ax + 1;
                e.step.sign = to[ax] - from[ax];
            }
        }
        t.entries.push_back(std::move(e));
    }
    t.rebuild_index();
    return t;
}

}  // namespace gridpatrol
