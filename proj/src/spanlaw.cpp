#include "pretzel/spanlaw.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace pretzel {

namespace {

SpanVerdict verdict(int S, const char* label, bool mirrored) {
    return {S, label, mirrored};
}

SpanVerdict dispatch(const PretzelDiagram& P, bool mirrored) {
    const auto& e = P.entries();
    const DiagramParams p = params(P);
    const int Sig = p.Sigma;

    if (p.z > 0) return verdict(Sig + p.z, "1", mirrored);

    const int rl = p.r + p.lambda;
    const int sl = p.s - p.lambda;
    if (rl != 1 && sl != 1) {
        if (e.size() == 2 && e[0] == 1 && e[1] == -1)
            return verdict(2, "2-exception", mirrored);
        return verdict(Sig - std::min({1, rl, sl}) + 1, "2", mirrored);
    }
    if (rl != 1) {
        // s - lambda = 1: the reflected diagram lands in the cases below
        if (mirrored) throw std::logic_error("span dispatch reflected twice");
        return dispatch(sort_desc(mirror(P)), true);
    }

    if (p.r > 1) {
        if (p.r == 2 && p.lambda == -1 && p.s == 0) {
            // entries (a1, a2, -1) with a1 >= a2 >= 2
            if (e[1] == 2) {
                if (e[0] == 2) return verdict(2, "3.2", mirrored);
                if (e[0] == 3) return verdict(1, "3.3", mirrored);
                return verdict(e[0] - 1, "3.4", mirrored);
            }
            return verdict(Sig - 2, "3.5", mirrored);
        }
        return verdict(Sig - 1, "3.1", mirrored);
    }

    if (p.r == 1) {
        if (p.s == 0) return verdict(1, "4.1", mirrored);
        if (p.s == 1) {
            // entries (a1, a2), the 2-strand torus link T(2, a1+a2)
            const int m = std::abs(e[0] + e[1]);
            if (m == 0) return verdict(2, "4.2", mirrored);
            if (m == 1) return verdict(1, "4.3", mirrored);
            return verdict(1 + m, "4.4", mirrored);
        }
        // entries (a1, a2, ..., a_{s+1}), a1 >= 2, the rest <= -2
        const int a1 = e[0], b2 = -e[1], b3 = -e[2];
        if (a1 != b2 - 1)
            return verdict(Sig - std::min(a1, b2 - 1), "5.1", mirrored);
        if (b2 != b3 - 1)
            return verdict(Sig - std::min(b2, b3 - 1), "5.2", mirrored);
        if (p.s == 2) {
            if (a1 == 2) return verdict(3, "5.3-exception", mirrored);
            return verdict(2 * a1, "5.3", mirrored);
        }
        const int b4 = -e[3];
        if (b3 < b4 - 1) {
            if (a1 == 2 && e[3] < -6) return verdict(Sig - 6, "5.4-exception", mirrored);
            return verdict(Sig - a1 - 3, "5.4", mirrored);
        }
        if (b3 == b4 - 1) return verdict(Sig - a1 - 2, "5.5", mirrored);
        return verdict(Sig - a1 - 1, "5.6", mirrored);
    }

    // r = 0, lambda = 1: entries (1, a2, ..., a_{s+1})
    if (p.s == 0) return verdict(1, "6.1", mirrored);
    if (e[1] != -2) {
        if (p.s == 1) return verdict(-e[1], "6.2", mirrored);
        if (p.s == 2) return verdict(Sig - 2, "6.3", mirrored);
        return verdict(Sig - 1, "6.4", mirrored);
    }
    if (p.s == 1) return verdict(1, "7.1", mirrored);
    const int a3 = e[2];
    if (p.s == 2) {
        if (a3 == -2) return verdict(2, "7.2", mirrored);
        if (a3 == -3) return verdict(1, "7.3", mirrored);
        return verdict(-1 - a3, "7.4", mirrored);
    }
    const int a4 = e[3];
    if (p.s == 3) {
        if (a3 == -2) return verdict(Sig - 1, "7.5", mirrored);
        if (a3 == -3) {
            if (a4 == -3) return verdict(6, "7.6", mirrored);
            if (a4 == -4) return verdict(3, "7.7", mirrored);
            return verdict(2 - a4, "7.8", mirrored);
        }
        return verdict(-a3 - a4, "7.9", mirrored);
    }
    // s > 3
    if (a3 == -2) return verdict(Sig - 1, "7.10", mirrored);
    if (a3 == -3) {
        if (a4 == -3) return verdict(Sig - 2, "7.11", mirrored);
        if (a4 == -4) {
            const int a5 = e[4];
            if (a5 == -4) return verdict(Sig - 3, "7.12", mirrored);
            if (a5 == -5) return verdict(Sig - 4, "7.13", mirrored);
            if (a5 < -6) return verdict(Sig - 6, "7.14-exception", mirrored);
            return verdict(Sig - 5, "7.14", mirrored);
        }
        return verdict(Sig - 3, "7.15", mirrored);
    }
    return verdict(Sig - 2, "7.16", mirrored);
}

}  // namespace

SpanVerdict span_formula(const PretzelDiagram& P) {
    if (!std::is_sorted(P.entries().begin(), P.entries().end(), std::greater<int>()))
        throw std::invalid_argument("not sorted: " + P.str());
    if (!is_reduced(P)) throw std::invalid_argument("not reduced: " + P.str());
    return dispatch(P, false);
}

int lower_bound(const PretzelDiagram& P) {
    const DiagramParams p = params(P);
    const int M = p.M.value_or(0);
    return p.Sigma - M - 4;
}

bool check_bounds(int S, const PretzelDiagram& P) {
    const DiagramParams p = params(P);
    const int n = P.size();
    if (p.z > S) return false;
    if (2 * (p.r + p.s) > S + 6) return false;
    if (2 * std::abs(p.lambda) > std::max(S + 4, 2 * S - 2)) return false;
    for (int a : P.entries())
        if (std::abs(a) > S + 4) return false;
    if (2 * n > std::max(4 * S + 10, 5 * S + 4)) return false;
    return true;
}

}  // namespace pretzel
