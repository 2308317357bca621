#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "pretzel/bracket.hpp"
#include "pretzel/diagram.hpp"
#include "pretzel/laurent.hpp"

using pretzel::kb_closed;
using pretzel::kb_recursive;
using pretzel::LaurentPoly;
using pretzel::PretzelDiagram;
using pretzel::qbracket;

namespace {

LaurentPoly mono(std::int64_t c, int e) { return LaurentPoly::monomial(c, e); }

// (-A^-3)^a for any sign of a
LaurentPoly neg_a3_pow(int a) {
    return mono(a % 2 ? -1 : 1, -3 * a);
}

PretzelDiagram D(std::vector<int> e) { return PretzelDiagram(std::move(e)); }

// all tuples of given length with entries in [-m, m]
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

TEST_CASE("qbracket point values") {
    CHECK(qbracket(0).is_zero());
    CHECK(qbracket(1) == mono(1, -1));
    CHECK(qbracket(-1) == mono(1, 1));
    CHECK(qbracket(2) == mono(1, 0) - mono(1, -4));
    CHECK(qbracket(-2) == mono(1, 0) - mono(1, 4));
    for (int a = -9; a <= 9; ++a)
        CHECK(qbracket(-a) == qbracket(a).mirror());
}

TEST_CASE("qbracket product identity") {
    // delta * [a] = -A^a + (-A^-3)^a
    for (int a = -25; a <= 25; ++a) {
        const LaurentPoly lhs = pretzel::delta() * qbracket(a);
        const LaurentPoly rhs = -mono(1, a) + neg_a3_pow(a);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("qbracket recurrences") {
    for (int a = 1; a <= 25; ++a)
        CHECK(qbracket(a) ==
              mono(1, 1) * qbracket(a - 1) + mono(1, -1) * neg_a3_pow(a - 1));
    // (-A^3)^(-a-1) = (-A^-3)^(a+1)
    for (int a = -25; a <= -1; ++a)
        CHECK(qbracket(a) ==
              mono(1, -1) * qbracket(a + 1) + mono(1, 1) * neg_a3_pow(a + 1));
}

TEST_CASE("bracket base cases") {
    CHECK(kb_closed(D({0})) == pretzel::delta());
    CHECK(kb_closed(D({0, 0})) == pretzel::delta() * pretzel::delta());
    CHECK(kb_closed(D({0, 0, 0})) == pretzel::delta().pow(3));
    for (int a = -6; a <= 6; ++a)
        CHECK(kb_closed(D({a})) == pretzel::delta() * neg_a3_pow(a));
    CHECK(kb_closed(D({1})) == mono(-1, -3) * pretzel::delta());
}

TEST_CASE("closed formula matches recurrence") {
    std::vector<std::vector<int>> tuples;
    for (int len = 1; len <= 3; ++len) all_tuples(len, 4, tuples);
    for (const auto& t : tuples)
        CHECK(kb_closed(D(t)) == kb_recursive(D(t)));

    std::mt19937 rng(314);
    std::uniform_int_distribution<int> len(4, 6);
    std::uniform_int_distribution<int> entry(-7, 7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> e(len(rng));
        for (int& a : e) a = entry(rng);
        CHECK(kb_closed(D(e)) == kb_recursive(D(e)));
    }
}

TEST_CASE("permutation and mirror invariance") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> len(2, 6);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> e(len(rng));
        for (int& a : e) a = entry(rng);
        const LaurentPoly ref = kb_closed(D(e));
        std::vector<int> p = e;
        std::shuffle(p.begin(), p.end(), rng);
        CHECK(kb_closed(D(p)) == ref);
        CHECK(kb_closed(pretzel::mirror(D(e))) == ref.mirror());
    }
}

TEST_CASE("reduction preserves the bracket span") {
    std::mt19937 rng(161803);
    std::uniform_int_distribution<int> len(2, 6);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> e(len(rng));
        for (int& a : e) a = entry(rng);
        const PretzelDiagram P = D(e);
        CHECK(kb_closed(pretzel::reduce(P)).span() == kb_closed(P).span());
    }
}

TEST_CASE("a 1,-2 head rewrites to a 2 head without changing the span") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> len(1, 4);
    std::uniform_int_distribution<int> entry(-7, -2);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> tail(len(rng));
        for (int& a : tail) a = entry(rng);
        std::vector<int> lhs = {1, -2};
        lhs.insert(lhs.end(), tail.begin(), tail.end());
        std::vector<int> rhs = {2};
        rhs.insert(rhs.end(), tail.begin(), tail.end());
        CHECK(kb_closed(D(lhs)).span() == kb_closed(D(rhs)).span());
    }
}

TEST_CASE("frozen bracket of P(3,3,-1,-2)") {
    const LaurentPoly q =
        LaurentPoly::divide_exact(kb_closed(D({3, 3, -1, -2})), pretzel::delta());
    const LaurentPoly want = mono(-2, 5) + mono(2, 1) + mono(-3, -3) +
                             mono(3, -7) + mono(-2, -11) + mono(2, -15) +
                             mono(-1, -19);
    CHECK(q == want);
    CHECK(kb_closed(D({3, 3, -1, -2})).span() == 4 + q.span());
}
