#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "gridpatrol/env.hpp"
#include "gridpatrol/errors.hpp"
#include "gridpatrol/grid.hpp"
#include "gridpatrol/table.hpp"

using namespace gridpatrol;

namespace {

std::string fixture(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("environment construction validates its vertex set") {
    CHECK_THROWS_AS(env_from_coords({}), std::invalid_argument);
    CHECK_THROWS_AS(env_from_coords({{1, 1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(env_from_coords({{1, 1}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(env_from_coords({{1, 1}, {3, 3}}), std::invalid_argument);

    Environment env = env_from_coords({{2, 1}, {1, 1}, {1, 2}});
    CHECK(env.d == 2);
    CHECK(env.verts.size() == 3);
    CHECK(std::is_sorted(env.verts.begin(), env.verts.end()));
    CHECK(env.index_of({1, 2}) >= 0);
    CHECK(env.index_of({9, 9}) == -1);
}

TEST_CASE("environment text loader") {
    Environment env = env_load_text("# comment\n1,1\n2,1\n\n3,1\n");
    CHECK(env.verts.size() == 3);
    CHECK(env.adj[env.index_of({2, 1})].size() == 2);

    CHECK_THROWS_AS(env_load_text("1,1\nbogus\n"), std::invalid_argument);
    CHECK_THROWS_AS(env_load_text(""), std::invalid_argument);
}

TEST_CASE("environment fixtures load and have the documented shape") {
    Environment hole = env_load_file(fixture("grid5x5_hole.env"));
    CHECK(hole.verts.size() == 24);
    CHECK(hole.index_of({3, 3}) == -1);
    CHECK(env_diameter(hole) == 8);

    Environment lshape = env_load_file(fixture("lshape.env"));
    CHECK(lshape.verts.size() == 12);
    CHECK(env_diameter(lshape) == 6);

    Environment path = env_load_file(fixture("path1x3.env"));
    CHECK(path.verts.size() == 3);
    CHECK(env_diameter(path) == 2);

    CHECK_THROWS_WITH_AS(env_load_file(fixture("squares_disjoint.env")),
                         "environment is disconnected", std::invalid_argument);
}

TEST_CASE("generators match the fixture files") {
    Environment hole = env_grid_with_hole(5, 5);
    CHECK(hole.verts == env_load_file(fixture("grid5x5_hole.env")).verts);

    Environment lshape = env_l_shape(4, 2, 2, 4);
    CHECK(lshape.verts == env_load_file(fixture("lshape.env")).verts);

    Environment grid = env_grid({3, 2});
    CHECK(grid.verts.size() == 6);
    CHECK(env_diameter(grid) == 3);

    Environment ring = env_grid_with_hole(5, 5, 2, 2, 4, 4);
    CHECK(ring.verts.size() == 16);
    CHECK(env_diameter(ring) == 8);

    CHECK_THROWS_AS(env_grid_with_hole(3, 3, 1, 1, 3, 3), std::invalid_argument);
}

TEST_CASE("offset-set sensing lists what the agent actually sees") {
    Environment lshape = env_l_shape(4, 2, 2, 4);
    EnvSense s = env_sense(lshape, {1, 1}, 1);
    CHECK(env_sense_key(s) == "(0,0)(0,1)(1,0)");

    // next to the hole the missing direction is absent from the percept
    Environment hole = env_grid_with_hole(5, 5);
    s = env_sense(hole, {2, 3}, 1);
    CHECK(env_sense_key(s) == "(-1,0)(0,-1)(0,0)(0,1)");

    s = env_sense(hole, {2, 3}, 2);
    CHECK(s.offsets.size() == 11);  // 13-cell diamond minus (3,3) and (0,3)
}

TEST_CASE("on plain grids offset sensing refines to boundary distances") {
    GridDims dims = {4, 3};
    Environment env = env_grid(dims);
    std::map<std::string, std::set<std::string>> by_offset_key;
    for (const Position& p : env.verts) {
        std::string ok = env_sense_key(env_sense(env, p, 1));
        std::string bk = sense_key(boundary_distances(dims, p, 1));
        by_offset_key[ok].insert(bk);
    }
    // same offset percept implies same boundary-distance percept and back
    std::set<std::string> seen_bk;
    for (const auto& [ok, bks] : by_offset_key) {
        CHECK(bks.size() == 1);
        CHECK(seen_bk.insert(*bks.begin()).second);
    }
}

TEST_CASE("table policies over offset keys patrol the drawn environments") {
    Environment hole = env_grid_with_hole(5, 5);
    TablePolicy ht = load_table_file(fixture("hole_policy.table"));
    CHECK(ht.bits() == 2);
    EnvPolicy hp = env_policy_from_table(ht, 1);
    VerifyReport rep = verify_patrols_env(hole, hp, 200);
    CHECK(rep.verdict == Verdict::Pass);

    Environment lshape = env_l_shape(4, 2, 2, 4);
    TablePolicy lt = load_table_file(fixture("lshape_policy.table"));
    CHECK(lt.mem_values().size() == 3);
    EnvPolicy lp = env_policy_from_table(lt, 1);
    rep = verify_patrols_env(lshape, lp, 100);
    CHECK(rep.verdict == Verdict::Pass);

    TablePolicy grid_keys = parse_table("0,1 ; 0 -> 1 +1 ; 0\n");
    CHECK_THROWS_AS(env_policy_from_table(grid_keys, 1), std::invalid_argument);
}

TEST_CASE("direction-sequence machine dimensions") {
    DirSeq ds = dirseq_patroller(env_grid({2, 2}));
    CHECK(ds.d == 2);
    CHECK(ds.diam == 2);
    CHECK(ds.num_sequences == 16);
    CHECK(ds.steps_per_sequence == 4);
    CHECK(ds.state_bits_bound() == 10);
    CHECK(ds.coverage_budget() == 64);
}

TEST_CASE("direction-sequence machine patrols within its computed budget") {
    for (const char* name : {"path1x3.env", "lshape.env"}) {
        Environment env = env_load_file(fixture(name));
        DirSeq ds = dirseq_patroller(env);
        VerifyReport rep = verify_patrols_env(env, ds.policy(), ds.coverage_budget());
        CHECK(rep.verdict == Verdict::Pass);
    }
}

TEST_CASE("direction-sequence machine state stays within its bit bound") {
    Environment env = env_grid({2, 2});
    DirSeq ds = dirseq_patroller(env);
    std::unordered_set<MemVal> states;
    run_env(env, ds.policy(), {{1, 1}, 0}, ds.coverage_budget(), &states);
    CHECK(states.size() >= 1);
    CHECK(states.size() <= (1u << ds.state_bits_bound()));
}

TEST_CASE("environment Hamiltonian search matches the drawn shapes") {
    CHECK(hamiltonian_search_env(env_grid({2, 2})).has_value());
    CHECK_FALSE(hamiltonian_search_env(env_load_file(fixture("path1x3.env"))).has_value());
    CHECK(hamiltonian_search_env(env_l_shape(4, 2, 2, 4)).has_value());
    CHECK(hamiltonian_search_env(env_grid_with_hole(5, 5)).has_value());
    CHECK_THROWS_AS(hamiltonian_search_env(env_grid({5, 5})), resource_error);
}

TEST_CASE("with full visibility a Hamiltonian cycle yields a 0-bit patrol") {
    Environment hole = env_grid_with_hole(5, 5);
    auto t = full_visibility_hamiltonian(hole);
    REQUIRE(t.has_value());
    CHECK(t->entries.size() == 24);  // every vertex senses a distinct picture
    CHECK(t->bits() == 0);
    EnvPolicy pol = env_policy_from_table(*t, env_diameter(hole));
    VerifyReport rep = verify_patrols_env(hole, pol, 24);
    CHECK(rep.verdict == Verdict::Pass);

    CHECK(full_visibility_hamiltonian(env_grid({2, 3})).has_value());
    CHECK_FALSE(full_visibility_hamiltonian(env_load_file(fixture("path1x3.env"))).has_value());
}
