#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gridpatrol/policy.hpp"
#include "gridpatrol/viz.hpp"

using namespace gridpatrol;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
    int n = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos;
         at = text.find(needle, at + needle.size())) {
        ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("arrow diagram of the 2x2 one-bit lap") {
    ArrowDiagram d = arrow_diagram({2, 2}, policy_make_move());
    CHECK(d.mems == std::vector<MemVal>{0, 1});
    REQUIRE(d.arrows.size() == 8);

    auto transient = std::count_if(d.arrows.begin(), d.arrows.end(),
                                   [](const ConfigArrow& a) { return a.transient; });
    CHECK(transient == 4);

    // the steady lap: (1,1)/0 -> (1,2)/0 -> (2,2)/0 -> (2,1)/1 -> (1,1)/0
    for (const ConfigArrow& a : d.arrows) {
        if (a.from == Position{1, 1} && a.mem_before == 0) {
            CHECK(a.to == Position{1, 2});
            CHECK(a.mem_after == 0);
            CHECK_FALSE(a.transient);
        }
        if (a.from == Position{2, 2} && a.mem_before == 0) {
            CHECK(a.to == Position{2, 1});
            CHECK(a.mem_after == 1);
            CHECK_FALSE(a.transient);
        }
        if (a.from == Position{2, 1} && a.mem_before == 0) {
            CHECK(a.transient);
        }
    }
    CHECK(diagram_is_functional(d));
}

TEST_CASE("arrow diagrams stay functional across shapes") {
    for (const GridDims& dims : {GridDims{3}, {4, 3}, {2, 3, 2}}) {
        ArrowDiagram d = arrow_diagram(dims, policy_make_move());
        CHECK(diagram_is_functional(d));
        CHECK(d.arrows.size() == 2 * static_cast<std::size_t>(vertex_count(dims)));
    }
    ArrowDiagram m = arrow_diagram({2, 3}, policy_memoryless_v1({2, 3}));
    CHECK(m.arrows.size() == 6);
    CHECK(diagram_is_functional(m));
    // a memoryless sweep has no transient arrows: every config is on its orbit
    CHECK(std::none_of(m.arrows.begin(), m.arrows.end(),
                       [](const ConfigArrow& a) { return a.transient; }));
}

TEST_CASE("DOT output draws one edge per arrow") {
    ArrowDiagram d = arrow_diagram({2, 2}, policy_make_move());
    std::string all = diagram_dot(d, true);
    CHECK(all.rfind("digraph", 0) == 0);
    CHECK(count_occurrences(all, " -> ") == 8);
    CHECK(all.find("red") != std::string::npos);
    CHECK(all.find("green") != std::string::npos);

    std::string steady = diagram_dot(d, false);
    CHECK(count_occurrences(steady, " -> ") == 4);
}

TEST_CASE("SVG output renders plane and space grids but nothing higher") {
    ArrowDiagram d2 = arrow_diagram({3, 2}, policy_make_move());
    std::string svg = diagram_svg(d2, true);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<polygon") != std::string::npos);

    ArrowDiagram d3 = arrow_diagram({2, 2, 2}, policy_make_move());
    CHECK(diagram_svg(d3).rfind("<svg", 0) == 0);

    ArrowDiagram d4 = arrow_diagram({2, 2, 2, 2}, policy_make_move());
    CHECK_THROWS_AS(diagram_svg(d4), std::domain_error);
}

TEST_CASE("region graph DOT labels regions with their sensing keys") {
    std::string dot = regions_dot(sensing_regions({5, 3}, 1));
    CHECK(dot.rfind("graph", 0) == 0);
    CHECK(dot.find("0,1|0,1") != std::string::npos);
    CHECK(dot.find("1,1|1,1") != std::string::npos);
}
