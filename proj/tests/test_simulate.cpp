#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "gridpatrol/errors.hpp"
#include "gridpatrol/policy.hpp"
#include "gridpatrol/simulate.hpp"
#include "gridpatrol/table.hpp"

using namespace gridpatrol;

namespace {

// 0-bit line policy that pushes right from the low wall but bounces on the
// middle vertex: covers only when started at the low wall
GridPolicy bounce_trap() {
    return policy_from_table(parse_table(
        "0,1 ; 0 -> 1 +1 ; 0\n"
        "1,1 ; 0 -> 1 +1 ; 0\n"
        "1,0 ; 0 -> 1 -1 ; 0\n"), 1);
}

GridPolicy always(Move mv, bool may_stay = false) {
    GridPolicy p;
    p.name = "always";
    p.may_stay = may_stay;
    p.eval = [mv](const SenseData&, MemVal) { return mv; };
    return p;
}

}  // namespace

TEST_CASE("run stops at the first repeated configuration") {
    Trace tr = run({2}, policy_make_move(), {{1}, 0}, 100);
    REQUIRE(tr.states.size() == 4);  // (1,0) (2,0) (1,1) (2,0)
    CHECK(tr.states[1].pos == Position{2});
    CHECK(tr.states[2].mem == 1);
    CHECK(tr.cover_time == 1);
    CHECK(tr.cycle_start == 1);
    CHECK(tr.cycle_len == 2);
}

TEST_CASE("run respects max_steps") {
    Trace tr = run({3, 3}, policy_make_move(), {{2, 2}, 0}, 3);
    CHECK(tr.states.size() == 4);
    CHECK(tr.states.back().t == 3);
    CHECK_FALSE(tr.cover_time.has_value());
}

TEST_CASE("policy misbehavior aborts the run") {
    CHECK_THROWS_AS(run({3}, always({{1, -1}, 0}), {{1}, 0}, 5), illegal_step_error);
    CHECK_THROWS_AS(run({3}, always({{2, +1}, 0}), {{1}, 0}, 5), illegal_step_error);
    CHECK_THROWS_AS(run({3}, always({{1, +2}, 0}), {{1}, 0}, 5), illegal_step_error);
    CHECK_THROWS_AS(run({3}, always({{0, 0}, 0}), {{1}, 0}, 5), zero_step_error);
    CHECK_THROWS_AS(run({3}, bounce_trap(), {{0}, 0}, 5), std::domain_error);
}

TEST_CASE("a staying policy loops on its start configuration") {
    Trace tr = run({2}, always({{0, 0}, 0}, true), {{1}, 0}, 10);
    REQUIRE(tr.states.size() == 2);
    CHECK(tr.states[1].stay);
    CHECK(tr.cycle_start == 0);
    CHECK(tr.cycle_len == 1);
    CHECK_FALSE(tr.cover_time.has_value());
}

TEST_CASE("verify passes the memoryless sweep on 2x3") {
    VerifyReport rep = verify_patrols({2, 3}, policy_memoryless_v1({2, 3}), {}, 6);
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.worst_cover_time == 5);
    CHECK(rep.budget == 6);
    CHECK(rep.failures.empty());
}

TEST_CASE("verify report does not depend on the thread count") {
    GridDims dims = {3, 4};
    VerifyReport one = verify_patrols(dims, policy_make_move(), {}, 24, 1);
    VerifyReport many = verify_patrols(dims, policy_make_move(), {}, 24, 4);
    CHECK(one.verdict == many.verdict);
    CHECK(one.worst_cover_time == many.worst_cover_time);
    CHECK(one.failures.size() == many.failures.size());
}

TEST_CASE("a closed orbit that misses vertices is a proven failure") {
    VerifyReport rep = verify_patrols({3}, bounce_trap(), {}, 8);
    CHECK(rep.verdict == Verdict::Fail);
    CHECK(rep.failures.size() == 2);  // starts (2) and (3) bounce forever
    CHECK(rep.failures[0].reason == "cycle closed before covering the target");
    CHECK(rep.worst_cover_time == 2);  // the start that does cover
}

TEST_CASE("an exhausted budget is inconclusive, not a failure") {
    VerifyReport rep = verify_patrols({3}, bounce_trap(), {}, 1);
    CHECK(rep.verdict == Verdict::Inconclusive);
    CHECK(rep.failures[0].reason == "budget exhausted before covering the target");
}

TEST_CASE("policy errors during verification are reported per start") {
    // the middle vertex has no rule, so starts that reach it fail
    GridPolicy holey = policy_from_table(parse_table(
        "0,1 ; 0 -> 1 +1 ; 0\n"
        "1,0 ; 0 -> 1 -1 ; 0\n"), 1);
    VerifyReport rep = verify_patrols({3}, holey, {}, 8);
    CHECK(rep.verdict == Verdict::Fail);
    CHECK(rep.failures.size() == 3);
}

TEST_CASE("cycle analysis recognizes a Hamiltonian orbit") {
    Trace tr = run({2, 3}, policy_memoryless_v1({2, 3}), {{1, 1}, 0}, 100);
    CycleCheck cc = induced_cycle_check(tr, {2, 3});
    CHECK(cc.conclusive);
    CHECK(cc.is_hamiltonian_cycle);
    CHECK(cc.length == 6);
}

TEST_CASE("cycle analysis rejects a short bounce") {
    Trace tr = run({3}, bounce_trap(), {{2}, 0}, 100);
    CycleCheck cc = induced_cycle_check(tr, {3});
    CHECK(cc.conclusive);
    CHECK_FALSE(cc.is_hamiltonian_cycle);
    CHECK(cc.length == 2);
}

TEST_CASE("cycle analysis is inconclusive on a truncated trace") {
    Trace tr = run({2, 3}, policy_memoryless_v1({2, 3}), {{1, 1}, 0}, 2);
    CycleCheck cc = induced_cycle_check(tr, {2, 3});
    CHECK_FALSE(cc.conclusive);
}

TEST_CASE("floor audit segments a sweep by its upper coordinates") {
    Trace tr = run({2, 3}, policy_memoryless_v1({2, 3}), {{1, 1}, 0}, 100);
    auto visits = floor_entry_audit(tr, {2, 3}, 1);
    REQUIRE(visits.size() == 5);
    CHECK(visits[0].floor_coords == std::vector<int>{1});
    CHECK_FALSE(visits[0].fully_covered);  // single vertex of a 2-wide floor
    CHECK(visits[2].floor_coords == std::vector<int>{3});
    CHECK(visits[2].fully_covered);
    CHECK(visits[4].floor_coords == std::vector<int>{1});
    CHECK(visits[4].fully_covered);

    CHECK_THROWS_AS(floor_entry_audit(tr, {2, 3}, 0), std::domain_error);
    CHECK_THROWS_AS(floor_entry_audit(tr, {2, 3}, 2), std::domain_error);
}

TEST_CASE("vertex targets count the start and stop early") {
    Target tg;
    tg.kind = Target::Kind::Vertices;
    tg.verts = {{2, 1}};
    Trace tr = run({2, 3}, policy_memoryless_v1({2, 3}), {{1, 1}, 0}, 100, tg);
    CHECK(tr.cover_time == 5);

    tg.verts = {{1, 1}};
    tr = run({2, 3}, policy_memoryless_v1({2, 3}), {{1, 1}, 0}, 100, tg);
    CHECK(tr.cover_time == 0);

    tg.verts = {{9, 9}};
    CHECK_THROWS_AS(run({2, 3}, policy_memoryless_v1({2, 3}), {{1, 1}, 0}, 10, tg),
                    std::domain_error);
}

TEST_CASE("floor targets verify coverage of each start's own floor") {
    Target tg;
    tg.kind = Target::Kind::FloorOfStart;
    tg.k = 2;
    VerifyReport rep = verify_patrols({2, 2, 2}, policy_make_move(), tg, 16);
    CHECK(rep.verdict == Verdict::Pass);
}
