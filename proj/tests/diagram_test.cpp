#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "pretzel/diagram.hpp"

using pretzel::PretzelDiagram;

namespace {

PretzelDiagram D(std::vector<int> e) { return PretzelDiagram(std::move(e)); }

std::vector<int> shuffled(std::vector<int> e, std::mt19937& rng) {
    std::shuffle(e.begin(), e.end(), rng);
    return e;
}

}  // namespace

TEST_CASE("parse and print") {
    CHECK(PretzelDiagram::parse("2,-3,-4") == D({2, -3, -4}));
    CHECK(PretzelDiagram::parse(" 2 , -3 ,-4 ") == D({2, -3, -4}));
    CHECK(PretzelDiagram::parse("0") == D({0}));
    CHECK(D({2, -3, -4}).str() == "(2,-3,-4)");
    CHECK(D({2, -3, -4}).entry_str() == "2,-3,-4");
    CHECK_THROWS_AS(PretzelDiagram::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(PretzelDiagram::parse("2,,3"), std::invalid_argument);
    CHECK_THROWS_AS(PretzelDiagram::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(PretzelDiagram::parse("2,3a"), std::invalid_argument);
    CHECK_THROWS_AS(PretzelDiagram(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("params") {
    const auto p = pretzel::params(D({3, 3, -1, -2}));
    CHECK(p.r == 2);
    CHECK(p.s == 1);
    CHECK(p.z == 0);
    CHECK(p.alpha == 0);
    CHECK(p.beta == 1);
    CHECK(p.lambda == -1);
    CHECK(p.Sigma == 8);
    CHECK(p.M.has_value());
    CHECK(*p.M == 2);

    const auto q = pretzel::params(D({1, -1}));
    CHECK(q.r == 0);
    CHECK(q.s == 0);
    CHECK(q.alpha == 1);
    CHECK(q.beta == 1);
    CHECK(q.lambda == 0);
    CHECK(q.Sigma == 0);
    CHECK_FALSE(q.M.has_value());

    const auto z = pretzel::params(D({0}));
    CHECK(z.z == 1);
    CHECK_FALSE(z.M.has_value());
}

TEST_CASE("is_reduced") {
    CHECK(pretzel::is_reduced(D({1, -1})));
    CHECK(pretzel::is_reduced(D({-1, 1})));
    CHECK_FALSE(pretzel::is_reduced(D({1, 1, -1})));
    CHECK_FALSE(pretzel::is_reduced(D({1, -1, 0})));
    CHECK_FALSE(pretzel::is_reduced(D({0, 1})));
    CHECK_FALSE(pretzel::is_reduced(D({0, -1})));
    CHECK(pretzel::is_reduced(D({0, 0})));
    CHECK(pretzel::is_reduced(D({0, 2, -3})));
    CHECK(pretzel::is_reduced(D({1, 1, 1})));
    CHECK(pretzel::is_reduced(D({2, -3, -4})));
    CHECK(pretzel::is_reduced(D({1, -2, -3})));
}

TEST_CASE("reduce") {
    CHECK(pretzel::reduce(D({1, 1, -1})) == D({1}));
    CHECK(pretzel::reduce(D({2, 1, -1})) == D({2}));
    CHECK(pretzel::reduce(D({0, 1})) == D({0}));
    CHECK(pretzel::reduce(D({0, 1, -1})) == D({0}));
    CHECK(pretzel::reduce(D({1, -1})) == D({1, -1}));
    CHECK(pretzel::reduce(D({-1, 1})) == D({-1, 1}));
    CHECK(pretzel::reduce(D({1, 1, -1, -1})) == D({1, -1}));
    CHECK(pretzel::reduce(D({2, -3, -4})) == D({2, -3, -4}));
    for (const auto& r : {pretzel::reduce(D({1, -1, 1, -1, 1}))})
        CHECK(r == D({1}));

    // order independence up to sorting
    std::mt19937 rng(11);
    const std::vector<std::vector<int>> pool = {
        {1, 1, -1, 2, 0},  {1, -1, -1, -1, 3}, {0, 1, -1, 1},
        {1, 1, 1, -1, -1}, {0, 0, 1, -1, 2},
    };
    for (const auto& base : pool) {
        const auto ref = pretzel::sort_desc(pretzel::reduce(D(base)));
        for (int i = 0; i < 20; ++i) {
            const auto r = pretzel::sort_desc(pretzel::reduce(D(shuffled(base, rng))));
            CHECK(r == ref);
        }
    }
}

TEST_CASE("sort, mirror, canonical") {
    CHECK(pretzel::sort_desc(D({-2, 3, 0, 3})) == D({3, 3, 0, -2}));
    CHECK(pretzel::mirror(D({2, -3, 0})) == D({-2, 3, 0}));
    CHECK(pretzel::canonical(D({2, 1, -3, -3})) == D({3, 3, -1, -2}));
    CHECK(pretzel::canonical(D({3, 3, -1, -2})) == D({3, 3, -1, -2}));
    CHECK(pretzel::canonical(pretzel::mirror(D({2, 1, -3, -3}))) ==
          D({3, 3, -1, -2}));

    std::mt19937 rng(5);
    const std::vector<std::vector<int>> pool = {
        {2, -3, -4}, {1, 1, 1}, {5, 0, -5}, {1, -1}, {2, 2, -2}, {7, -6, 1, -1},
    };
    for (const auto& base : pool) {
        const auto c = pretzel::canonical(D(base));
        CHECK(pretzel::canonical(c) == c);
        CHECK(pretzel::canonical(pretzel::mirror(D(base))) == c);
        for (int i = 0; i < 10; ++i)
            CHECK(pretzel::canonical(D(shuffled(base, rng))) == c);
    }
}

TEST_CASE("is_knot") {
    CHECK(pretzel::is_knot(D({1, 1, 1})));
    CHECK(pretzel::is_knot(D({1, 1, 2})));
    CHECK(pretzel::is_knot(D({3, 3, -2})));
    CHECK(pretzel::is_knot(D({0})));
    CHECK(pretzel::is_knot(D({2})));
    CHECK_FALSE(pretzel::is_knot(D({1, -1})));
    CHECK_FALSE(pretzel::is_knot(D({2, 2})));
    CHECK_FALSE(pretzel::is_knot(D({0, 0})));
    CHECK_FALSE(pretzel::is_knot(D({1, 1})));
    CHECK(pretzel::is_knot(D({3, 3, -1, -2})));
}
