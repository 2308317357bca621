#include <doctest.h>

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "pretzel/bracket.hpp"
#include "pretzel/diagram.hpp"
#include "pretzel/laurent.hpp"
#include "pretzel/planar.hpp"

using pretzel::build;
using pretzel::jones;
using pretzel::jones1;
using pretzel::jones_span;
using pretzel::kb_closed;
using pretzel::PretzelDiagram;
using pretzel::state_sum;
using pretzel::TPoly;
using pretzel::trace;

namespace {

PretzelDiagram D(std::vector<int> e) { return PretzelDiagram(std::move(e)); }

void all_tuples(int len, int m, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(len, -m);
    while (true) {
        out.push_back(cur);
        int i = 0;
        while (i < len && cur[i] == m) cur[i++] = -m;
        if (i == len) break;
        ++cur[i];
    }
}

}  // namespace

TEST_CASE("build shapes") {
    const auto one = build(D({1}));
    CHECK(one.crossing_count() == 1);
    CHECK(one.arcs().size() == 2);
    CHECK(one.free_circles() == 0);
    CHECK(one.crossings()[0].positive);

    const auto flat = build(D({0}));
    CHECK(flat.crossing_count() == 0);
    CHECK(flat.arcs().empty());
    CHECK(flat.free_circles() == 1);
    CHECK(build(D({0, 0})).free_circles() == 2);
    CHECK(build(D({0, 0, 0})).free_circles() == 3);

    const auto p234 = build(D({2, -3, -4}));
    CHECK(p234.crossing_count() == 9);
    CHECK(p234.free_circles() == 0);
    // 4 ports per crossing, every port on exactly one arc
    CHECK(p234.arcs().size() == 18);
}

TEST_CASE("state sum equals the closed formula") {
    std::vector<std::vector<int>> tuples;
    for (int len = 1; len <= 3; ++len) all_tuples(len, 3, tuples);
    for (const auto& t : tuples)
        CHECK(state_sum(build(D(t))) == kb_closed(D(t)));
    CHECK(state_sum(build(D({3, 3, -1, -2}))) == kb_closed(D({3, 3, -1, -2})));
    CHECK(state_sum(build(D({2, -3, -4}))) == kb_closed(D({2, -3, -4})));
}

TEST_CASE("component count agrees with the parity rule") {
    std::vector<std::vector<int>> tuples;
    for (int len = 1; len <= 4; ++len) all_tuples(len, 4, tuples);
    for (const auto& t : tuples) {
        const auto tr = trace(build(D(t)));
        CHECK((tr.component_count == 1) == pretzel::is_knot(D(t)));
        CHECK(tr.component_count >= 1);
    }
}

TEST_CASE("writhe anchors") {
    CHECK(trace(build(D({1}))).writhe == -1);
    CHECK(trace(build(D({-1}))).writhe == 1);
    CHECK(trace(build(D({3}))).writhe == -3);
    CHECK(trace(build(D({-3}))).writhe == 3);
    CHECK(trace(build(D({2}))).writhe == -2);

    const auto hopf = trace(build(D({1, 1})));
    CHECK(hopf.component_count == 2);
    CHECK(std::abs(hopf.writhe) == 2);
}

TEST_CASE("jones values") {
    CHECK(jones1(D({1})) == TPoly{{0, 1}});
    CHECK(jones1(D({2})) == TPoly{{0, 1}});
    CHECK(jones1(D({1, 0})) == TPoly{{0, 1}});
    CHECK(jones1(D({0})) == TPoly{{0, 1}});

    const TPoly trefoil{{-4, -1}, {-3, 1}, {-1, 1}};
    const TPoly got = jones1(D({1, 1, 1}));
    CHECK((got == trefoil || got == pretzel::mirror_t(trefoil)));

    const TPoly hopf{{-3, 1}, {-2, 1}, {-1, 1}, {0, 1}};
    const TPoly vh = jones(D({1, 1}));
    CHECK((vh == hopf || vh == pretzel::mirror_t(hopf)));
    CHECK(pretzel::span_t(vh) == 3);
}

TEST_CASE("jones domain errors") {
    CHECK_THROWS_AS(jones(D({1})), std::domain_error);   // odd component count
    CHECK_THROWS_AS(jones1(D({1, 1})), std::domain_error);  // two components
    CHECK_THROWS_AS(jones1(D({1, -1})), std::domain_error);
}

TEST_CASE("jones span") {
    CHECK(jones_span(D({1, 1})) == 3);
    CHECK(jones_span(D({1, 1, 1})) == 4);
    CHECK(jones_span(D({3, 3, -1, -2})) == 7);
    CHECK(jones_span(D({2, -3, -4})) == 3);
    CHECK(jones_span(D({2})) == 1);
    CHECK(jones_span(D({0})) == 1);
}

TEST_CASE("state sum crossing cap") {
    CHECK_THROWS_AS(state_sum(build(D({5})), 4), std::domain_error);
    CHECK(state_sum(build(D({4})), 4) == kb_closed(D({4})));

    CHECK(pretzel::state_sum_limit() == 20);
    setenv("PRETZEL_MAX_STATE_SUM", "6", 1);
    CHECK(pretzel::state_sum_limit() == 6);
    CHECK_THROWS_AS(state_sum(build(D({4, 3}))), std::domain_error);
    setenv("PRETZEL_MAX_STATE_SUM", "abc", 1);
    CHECK_THROWS_AS(pretzel::state_sum_limit(), std::invalid_argument);
    unsetenv("PRETZEL_MAX_STATE_SUM");
    CHECK(pretzel::state_sum_limit() == 20);
}
