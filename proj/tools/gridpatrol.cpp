// Command-line front end: feasibility checks, simulation, verification,
// exhaustive searches, region analysis, and diagram export.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict (not
// patrollable, verification failed or inconclusive, nothing found), 2 errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridpatrol/env.hpp"
#include "gridpatrol/errors.hpp"
#include "gridpatrol/feasibility.hpp"
#include "gridpatrol/jsonio.hpp"
#include "gridpatrol/simulate.hpp"
#include "gridpatrol/table.hpp"
#include "gridpatrol/viz.hpp"

namespace gp = gridpatrol;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument("junk");
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad ") + what + " '" + text + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string("empty ") + what);
    return out;
}

void emit(const std::string& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(output_path);
    if (!f) throw std::invalid_argument("cannot write to '" + output_path + "'");
    f << payload;
    if (payload.empty() || payload.back() != '\n') f << '\n';
}

// Settings that may come from (highest priority first) a command-line flag,
// the optional JSON config file, or a built-in default.
struct Config {
    json values;  // empty object when no --config

    long long pick(const CLI::Option* flag, long long flag_value, const char* key,
                   long long fallback) const {
        if (flag && flag->count() > 0) return flag_value;
        if (values.contains(key)) return values[key].get<long long>();
        return fallback;
    }
};

Config load_config(const std::string& path) {
    Config c;
    c.values = json::object();
    if (path.empty()) return c;
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open config file '" + path + "'");
    f >> c.values;
    if (!c.values.is_object()) throw std::invalid_argument("config file must hold a JSON object");
    return c;
}

int default_jobs() {
    if (const char* env = std::getenv("GRIDPATROL_JOBS")) {
        try {
            int j = std::stoi(env);
            if (j >= 1) return j;
        } catch (const std::exception&) {
            // fall through to the default; a garbled env var should not stop runs
        }
    }
    return 1;
}

gp::GridPolicy make_grid_policy(const std::string& selector, const gp::GridDims& dims, int V) {
    if (selector == "memoryless") {
        if (V != 1) {
            throw std::invalid_argument(
                "policy 'memoryless' is defined for V=1; use 'memoryless-vgt1' for V >= 2");
        }
        return gp::policy_memoryless_v1(dims);
    }
    if (selector == "memoryless-vgt1") return gp::policy_memoryless_vgt1(dims, V);
    if (selector == "makemove") {
        if (V != 1) throw std::invalid_argument("policy 'makemove' is defined for V=1");
        return gp::policy_make_move();
    }
    if (selector == "noninductive") {
        if (V != 1) throw std::invalid_argument("policy 'noninductive' is defined for V=1");
        return gp::policy_make_move_noninductive();
    }
    if (selector.rfind("table:", 0) == 0) {
        return gp::policy_from_table(gp::load_table_file(selector.substr(6)), V);
    }
    throw std::invalid_argument("unknown policy '" + selector +
                                "' (expected memoryless, memoryless-vgt1, makemove, "
                                "noninductive, or table:PATH)");
}

gp::EnvPolicy make_env_policy(const std::string& selector, const gp::Environment& env, int V,
                              long long* dirseq_budget) {
    if (selector == "dirseq") {
        gp::DirSeq ds = gp::dirseq_patroller(env);
        if (dirseq_budget) *dirseq_budget = ds.coverage_budget();
        return ds.policy();
    }
    if (selector.rfind("table:", 0) == 0) {
        return gp::env_policy_from_table(gp::load_table_file(selector.substr(6)), V);
    }
    throw std::invalid_argument("unknown environment policy '" + selector +
                                "' (expected dirseq or table:PATH)");
}

int exit_code_for(gp::Verdict v) { return v == gp::Verdict::Pass ? kExitOk : kExitNegative; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grid patrolling policies: simulate, verify, search, visualize"};
    app.require_subcommand(1);

    std::string config_path;
    int jobs = default_jobs();
    app.add_option("--config", config_path, "JSON file presetting jobs/budget/caps");
    CLI::Option* jobs_opt =
        app.add_option("--jobs", jobs, "worker threads for verification sweeps");

    // ---- check ----------------------------------------------------------
    auto* cmd_check = app.add_subcommand("check", "0-bit patrollability conditions for a grid");
    std::string check_dims;
    int check_V = 1;
    cmd_check->add_option("--dims", check_dims, "grid dimensions, e.g. 5,3,3,2")->required();
    cmd_check->add_option("-V,--sensing", check_V, "sensing range (default 1)");

    // ---- simulate -------------------------------------------------------
    auto* cmd_sim = app.add_subcommand("simulate", "run one agent and export the trace");
    std::string sim_dims, sim_policy, sim_start, sim_output;
    int sim_V = 1;
    long long sim_mem = 0, sim_max_steps = 0;
    CLI::Option* sim_steps_opt;
    cmd_sim->add_option("--dims", sim_dims, "grid dimensions")->required();
    cmd_sim->add_option("--policy", sim_policy, "memoryless|memoryless-vgt1|makemove|noninductive|table:PATH")
        ->required();
    cmd_sim->add_option("--start", sim_start, "start vertex, e.g. 1,1")->required();
    cmd_sim->add_option("-V,--sensing", sim_V, "sensing range (default 1)");
    cmd_sim->add_option("--mem", sim_mem, "start memory value (default 0)");
    sim_steps_opt = cmd_sim->add_option("--max-steps", sim_max_steps,
                                        "step limit (default 4x vertex count)");

    // ---- verify ---------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "check coverage from every start");
    std::string ver_dims, ver_policy;
    int ver_V = 1, ver_floor = 0;
    long long ver_budget = 0;
    CLI::Option* ver_budget_opt;
    cmd_verify->add_option("--dims", ver_dims, "grid dimensions")->required();
    cmd_verify->add_option("--policy", ver_policy, "policy selector, as in simulate")->required();
    cmd_verify->add_option("-V,--sensing", ver_V, "sensing range (default 1)");
    ver_budget_opt = cmd_verify->add_option("--budget", ver_budget,
                                            "steps allowed per start (default 2x vertex count)");
    cmd_verify->add_option("--floor", ver_floor,
                           "restrict the target to the k-floor of each start");

    // ---- search0 --------------------------------------------------------
    auto* cmd_search = app.add_subcommand("search0", "exhaustive 0-bit policy search");
    std::string se_dims, se_output;
    int se_V = 1;
    long long se_cap = gp::kDefaultSearchWorkCap;
    CLI::Option* se_cap_opt;
    cmd_search->add_option("--dims", se_dims, "grid dimensions")->required();
    cmd_search->add_option("-V,--sensing", se_V, "sensing range (default 1)");
    se_cap_opt = cmd_search->add_option("--cap", se_cap, "work cap in walk steps");
    cmd_search->add_option("--output", se_output, "write the found policy here; report as JSON");

    // ---- regions --------------------------------------------------------
    auto* cmd_regions = app.add_subcommand("regions", "sensing-region graph of a grid");
    std::string rg_dims, rg_format = "json", rg_output;
    int rg_V = 1;
    cmd_regions->add_option("--dims", rg_dims, "grid dimensions")->required();
    cmd_regions->add_option("-V,--sensing", rg_V, "sensing range (default 1)");
    cmd_regions->add_option("--format", rg_format, "json|dot (default json)")
        ->check(CLI::IsMember({"json", "dot"}));
    cmd_regions->add_option("--output", rg_output, "write to file instead of standard output");

    // ---- hamiltonian ----------------------------------------------------
    auto* cmd_ham = app.add_subcommand("hamiltonian", "exhaustive Hamiltonian cycle search");
    std::string ham_dims;
    long long ham_cap = 24;
    CLI::Option* ham_cap_opt;
    cmd_ham->add_option("--dims", ham_dims, "grid dimensions")->required();
    ham_cap_opt = cmd_ham->add_option("--cap", ham_cap, "largest vertex count accepted");

    // ---- viz ------------------------------------------------------------
    auto* cmd_viz = app.add_subcommand("viz", "arrow diagram of a policy over a grid");
    std::string vz_dims, vz_policy, vz_format = "dot", vz_output;
    int vz_V = 1;
    bool vz_all = false;
    cmd_viz->add_option("--dims", vz_dims, "grid dimensions")->required();
    cmd_viz->add_option("--policy", vz_policy, "policy selector, as in simulate")->required();
    cmd_viz->add_option("-V,--sensing", vz_V, "sensing range (default 1)");
    cmd_viz->add_option("--format", vz_format, "dot|svg (default dot)")
        ->check(CLI::IsMember({"dot", "svg"}));
    cmd_viz->add_flag("--all-arrows", vz_all, "include transient arrows");
    cmd_viz->add_option("--output", vz_output, "write to file instead of standard output");

    // ---- env ------------------------------------------------------------
    auto* cmd_env = app.add_subcommand("env", "general integer-lattice environments");
    cmd_env->require_subcommand(1);

    auto* cmd_env_check = cmd_env->add_subcommand("check", "connectivity and diameter");
    std::string ec_file;
    cmd_env_check->add_option("--file", ec_file, "environment file")->required();

    auto* cmd_env_patrol = cmd_env->add_subcommand("patrol", "simulate or verify a policy");
    std::string ep_file, ep_policy, ep_start;
    int ep_V = 1;
    long long ep_budget = 0, ep_max_steps = 0;
    CLI::Option* ep_budget_opt;
    CLI::Option* ep_steps_opt;
    cmd_env_patrol->add_option("--file", ep_file, "environment file")->required();
    cmd_env_patrol->add_option("--policy", ep_policy, "dirseq|table:PATH")->required();
    cmd_env_patrol->add_option("--start", ep_start, "start vertex; omit to verify all starts");
    cmd_env_patrol->add_option("-V,--sensing", ep_V, "sensing range for table policies");
    ep_budget_opt = cmd_env_patrol->add_option("--budget", ep_budget,
                                               "verification budget per start");
    ep_steps_opt = cmd_env_patrol->add_option("--max-steps", ep_max_steps,
                                              "trace step limit with --start");

    auto* cmd_env_ham = cmd_env->add_subcommand("hamiltonian", "Hamiltonian cycle search");
    std::string eh_file, eh_policy_out;
    long long eh_cap = 24;
    CLI::Option* eh_cap_opt;
    cmd_env_ham->add_option("--file", eh_file, "environment file")->required();
    eh_cap_opt = cmd_env_ham->add_option("--cap", eh_cap, "largest vertex count accepted");
    cmd_env_ham->add_option("--policy-out", eh_policy_out,
                            "also write the full-visibility one-direction-per-vertex policy");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitError;  // keep help/version at 0
    }

    try {
        Config cfg = load_config(config_path);
        jobs = static_cast<int>(cfg.pick(jobs_opt, jobs, "jobs", default_jobs()));
        if (jobs < 1) throw std::invalid_argument("--jobs must be >= 1");

        if (cmd_check->parsed()) {
            gp::GridDims dims = parse_int_list(check_dims, "dims");
            gp::FeasibilityVerdict v = gp::zero_bit_feasibility(dims, check_V);
            emit(gp::feasibility_json(dims, check_V, v), "");
            std::cerr << (v.patrollable_0bit ? "patrollable" : "not patrollable")
                      << " with 0 bits at V=" << check_V << "\n";
            return v.patrollable_0bit ? kExitOk : kExitNegative;
        }

        if (cmd_sim->parsed()) {
            gp::GridDims dims = parse_int_list(sim_dims, "dims");
            gp::GridPolicy policy = make_grid_policy(sim_policy, dims, sim_V);
            gp::AgentState start{parse_int_list(sim_start, "start"), sim_mem};
            long long steps =
                cfg.pick(sim_steps_opt, sim_max_steps, "max_steps", 4 * gp::vertex_count(dims));
            gp::Trace tr = gp::run(dims, policy, start, steps);
            emit(gp::trace_json(tr), "");
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            gp::GridDims dims = parse_int_list(ver_dims, "dims");
            gp::GridPolicy policy = make_grid_policy(ver_policy, dims, ver_V);
            gp::Target target;
            if (ver_floor > 0) {
                target.kind = gp::Target::Kind::FloorOfStart;
                target.k = ver_floor;
            }
            long long budget =
                cfg.pick(ver_budget_opt, ver_budget, "budget", 2 * gp::vertex_count(dims));
            gp::VerifyReport rep = gp::verify_patrols(dims, policy, target, budget, jobs);
            emit(gp::report_json(rep), "");
            std::cerr << gp::verdict_name(rep.verdict) << " (" << rep.failures.size()
                      << " failing starts, budget " << budget << ")\n";
            return exit_code_for(rep.verdict);
        }

        if (cmd_search->parsed()) {
            gp::GridDims dims = parse_int_list(se_dims, "dims");
            long long cap = cfg.pick(se_cap_opt, se_cap, "search_cap", gp::kDefaultSearchWorkCap);
            gp::SearchStats stats;
            std::optional<gp::TablePolicy> found =
                gp::zero_bit_policy_search(dims, se_V, cap, &stats);
            std::cerr << (found ? "found" : "no 0-bit policy") << " after " << stats.work
                      << " walk steps\n";
            if (!found) {
                emit(gp::search_json(false, ""), "");
                return kExitNegative;
            }
            if (se_output.empty()) {
                emit(gp::serialize_table(*found), "");
            } else {
                emit(gp::serialize_table(*found), se_output);
                emit(gp::search_json(true, se_output), "");
            }
            return kExitOk;
        }

        if (cmd_regions->parsed()) {
            gp::GridDims dims = parse_int_list(rg_dims, "dims");
            gp::RegionGraph rg = gp::sensing_regions(dims, rg_V);
            emit(rg_format == "dot" ? gp::regions_dot(rg) : gp::regions_json(rg), rg_output);
            return kExitOk;
        }

        if (cmd_ham->parsed()) {
            gp::GridDims dims = parse_int_list(ham_dims, "dims");
            long long cap = cfg.pick(ham_cap_opt, ham_cap, "ham_cap", 24);
            auto cycle = gp::hamiltonian_search(dims, cap);
            emit(gp::hamiltonian_json(cycle), "");
            return cycle ? kExitOk : kExitNegative;
        }

        if (cmd_viz->parsed()) {
            gp::GridDims dims = parse_int_list(vz_dims, "dims");
            gp::GridPolicy policy = make_grid_policy(vz_policy, dims, vz_V);
            gp::ArrowDiagram dg = gp::arrow_diagram(dims, policy);
            emit(vz_format == "svg" ? gp::diagram_svg(dg, vz_all) : gp::diagram_dot(dg, vz_all),
                 vz_output);
            return kExitOk;
        }

        if (cmd_env_check->parsed()) {
            gp::Environment env;
            try {
                env = gp::env_load_file(ec_file);
            } catch (const std::invalid_argument& e) {
                if (std::string(e.what()).find("disconnected") == std::string::npos) throw;
                json o;
                o["connected"] = false;
                emit(o.dump(2), "");
                return kExitNegative;
            }
            emit(gp::env_check_json(env, gp::env_diameter(env)), "");
            return kExitOk;
        }

        if (cmd_env_patrol->parsed()) {
            gp::Environment env = gp::env_load_file(ep_file);
            long long dirseq_budget = 0;
            gp::EnvPolicy policy = make_env_policy(ep_policy, env, ep_V, &dirseq_budget);
            const long long n = static_cast<long long>(env.verts.size());
            if (!ep_start.empty()) {
                gp::AgentState start{parse_int_list(ep_start, "start"), 0};
                long long steps = cfg.pick(ep_steps_opt, ep_max_steps, "max_steps",
                                           dirseq_budget > 0 ? dirseq_budget : 4 * n);
                gp::Trace tr = gp::run_env(env, policy, start, steps);
                emit(gp::trace_json(tr), "");
                return kExitOk;
            }
            long long fallback = dirseq_budget > 0
                                     ? dirseq_budget
                                     : 2 * n * static_cast<long long>(policy.mems.size());
            long long budget = cfg.pick(ep_budget_opt, ep_budget, "budget", fallback);
            gp::VerifyReport rep = gp::verify_patrols_env(env, policy, budget, jobs);
            emit(gp::report_json(rep), "");
            std::cerr << gp::verdict_name(rep.verdict) << " (" << rep.failures.size()
                      << " failing starts, budget " << budget << ")\n";
            return exit_code_for(rep.verdict);
        }

        if (cmd_env_ham->parsed()) {
            gp::Environment env = gp::env_load_file(eh_file);
            long long cap = cfg.pick(eh_cap_opt, eh_cap, "ham_cap", 24);
            auto cycle = gp::hamiltonian_search_env(env, cap);
            emit(gp::hamiltonian_json(cycle), "");
            if (cycle && !eh_policy_out.empty()) {
                auto table = gp::full_visibility_hamiltonian(env, cap);
                emit(gp::serialize_table(*table), eh_policy_out);
            }
            return cycle ? kExitOk : kExitNegative;
        }

        throw std::logic_error("no subcommand dispatched");
    } catch (const gp::resource_error& e) {
        emit(gp::error_json("resource", e.what()), "");
        return kExitError;
    } catch (const gp::policy_undefined_error& e) {
        emit(gp::error_json("policy-undefined", e.what()), "");
        return kExitError;
    } catch (const gp::illegal_step_error& e) {
        emit(gp::error_json("illegal-step", e.what()), "");
        return kExitError;
    } catch (const gp::zero_step_error& e) {
        emit(gp::error_json("zero-step", e.what()), "");
        return kExitError;
    } catch (const std::exception& e) {
        emit(gp::error_json("usage", e.what()), "");
        return kExitError;
    }
}
