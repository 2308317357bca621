#include "pretzel/planar.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pretzel/bracket.hpp"

namespace pretzel {

namespace {

// port layout within a crossing block
enum { TL = 0, TR = 1, BL = 2, BR = 3 };

// the strand entering a port leaves through the diagonally opposite one
inline int through(int port) { return (port & ~3) | ((port & 3) ^ 3); }

struct DSU {
    std::vector<int> parent;
    explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PlanarDiagram build(const PretzelDiagram& P) {
    const auto& entries = P.entries();
    const int n = static_cast<int>(entries.size());

    PlanarDiagram pd;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < std::abs(entries[i]); ++k)
            pd.crossings_.push_back({i, entries[i] > 0});
    const int c = pd.crossing_count();

    // Junction nodes stand for the four column corners; they are spliced away
    // below, leaving arcs between crossing ports only (or closed circles with
    // no ports at all, from chains of empty columns).
    const int jbase = 4 * c;
    auto jtl = [&](int i) { return jbase + 4 * i + 0; };
    auto jtr = [&](int i) { return jbase + 4 * i + 1; };
    auto jbl = [&](int i) { return jbase + 4 * i + 2; };
    auto jbr = [&](int i) { return jbase + 4 * i + 3; };

    std::vector<std::vector<int>> adj(jbase + 4 * n);
    auto link = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };

    int base = 0;
    for (int i = 0; i < n; ++i) {
        const int m = std::abs(entries[i]);
        if (m == 0) {
            link(jtl(i), jbl(i));
            link(jtr(i), jbr(i));
        } else {
            link(jtl(i), 4 * base + TL);
            link(jtr(i), 4 * base + TR);
            for (int k = 0; k + 1 < m; ++k) {
                link(4 * (base + k) + BL, 4 * (base + k + 1) + TL);
                link(4 * (base + k) + BR, 4 * (base + k + 1) + TR);
            }
            link(4 * (base + m - 1) + BL, jbl(i));
            link(4 * (base + m - 1) + BR, jbr(i));
            base += m;
        }
    }
    for (int i = 0; i < n; ++i) {
        link(jtr(i), jtl((i + 1) % n));
        link(jbr(i), jbl((i + 1) % n));
    }

    // splice out junctions: ports have one neighbor, junctions two
    std::vector<char> seen(adj.size(), 0);
    for (int p = 0; p < 4 * c; ++p) {
        if (seen[p]) continue;
        seen[p] = 1;
        int prev = p, cur = adj[p][0];
        while (cur >= jbase) {
            seen[cur] = 1;
            const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
        }
        seen[cur] = 1;
        pd.arcs_.emplace_back(p, cur);
    }
    for (int j = jbase; j < static_cast<int>(adj.size()); ++j) {
        if (seen[j]) continue;
        // junction-only cycle: a circle with no crossings
        int prev = j, cur = adj[j][0];
        seen[j] = 1;
        while (cur != j) {
            seen[cur] = 1;
            const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
        }
        ++pd.free_circles_;
    }
    return pd;
}

int state_sum_limit() {
    if (const char* env = std::getenv("PRETZEL_MAX_STATE_SUM")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("PRETZEL_MAX_STATE_SUM is not an integer");
        }
    }
    return 20;
}

LaurentPoly state_sum(const PlanarDiagram& pd) { return state_sum(pd, state_sum_limit()); }

LaurentPoly state_sum(const PlanarDiagram& pd, int max_crossings) {
    const int c = pd.crossing_count();
    if (c > max_crossings)
        throw std::domain_error("state sum too large: " + std::to_string(c) +
                                " crossings exceeds cap " + std::to_string(max_crossings));

    // delta powers up to the most circles a resolution can produce
    std::vector<LaurentPoly> dpow(2 * c + pd.free_circles() + 2);
    dpow[0] = LaurentPoly::monomial(1, 0);
    for (size_t k = 1; k < dpow.size(); ++k) dpow[k] = dpow[k - 1] * LaurentPoly::delta();

    LaurentPoly total;
    for (std::uint64_t state = 0; state < (std::uint64_t{1} << c); ++state) {
        DSU dsu(4 * c);
        for (const auto& [a, b] : pd.arcs()) dsu.unite(a, b);
        int exp = 0;
        for (int x = 0; x < c; ++x) {
            const bool a_smoothing = !(state >> x & 1);
            exp += a_smoothing ? 1 : -1;
            // A-smoothing reconnects vertically in positive columns and
            // horizontally in negative ones (see header convention)
            const bool vertical = pd.crossings()[x].positive == a_smoothing;
            if (vertical) {
                dsu.unite(4 * x + TL, 4 * x + BL);
                dsu.unite(4 * x + TR, 4 * x + BR);
            } else {
                dsu.unite(4 * x + TL, 4 * x + TR);
                dsu.unite(4 * x + BL, 4 * x + BR);
            }
        }
        int circles = pd.free_circles();
        for (int p = 0; p < 4 * c; ++p)
            if (dsu.find(p) == p) ++circles;
        total += LaurentPoly::monomial(1, exp) * dpow[circles];
    }
    return total;
}

namespace {

// direction vector of a strand entering at the given corner, local
// coordinates TL=(-1,1) TR=(1,1) BL=(-1,-1) BR=(1,-1)
inline void entry_dir(int corner, int& dx, int& dy) {
    switch (corner) {
        case TL: dx = 1, dy = -1; break;   // toward BR
        case TR: dx = -1, dy = -1; break;  // toward BL
        case BL: dx = 1, dy = 1; break;    // toward TR
        default: dx = -1, dy = 1; break;   // toward TL
    }
}

}  // namespace

TraceResult trace(const PlanarDiagram& pd) {
    const int c = pd.crossing_count();
    std::vector<int> arc_of(4 * c, -1), arc_other(4 * c, -1);
    for (size_t i = 0; i < pd.arcs().size(); ++i) {
        const auto& [a, b] = pd.arcs()[i];
        arc_of[a] = arc_of[b] = static_cast<int>(i);
        arc_other[a] = b;
        arc_other[b] = a;
    }

    TraceResult res;
    res.arc_direction.assign(pd.arcs().size(), 0);
    // entry port of each crossing's two strands; strand 0 is TL<->BR
    std::vector<int> entry(2 * c, -1);

    std::vector<char> visited(4 * c, 0);
    for (int start = 0; start < 4 * c; ++start) {
        if (visited[start]) continue;
        ++res.component_count;
        // leave along the arc at start, cross, repeat until back home
        int port = start;
        do {
            visited[port] = 1;
            const int arc = arc_of[port];
            res.arc_direction[arc] = pd.arcs()[arc].first == port ? 1 : -1;
            const int in = arc_other[port];
            visited[in] = 1;
            const int strand = ((in & 3) == TL || (in & 3) == BR) ? 0 : 1;
            entry[2 * (in >> 2) + strand] = in;
            port = through(in);
        } while (port != start);
    }
    res.component_count += pd.free_circles();

    for (int x = 0; x < c; ++x) {
        const int over = pd.crossings()[x].positive ? entry[2 * x + 1] : entry[2 * x];
        const int under = pd.crossings()[x].positive ? entry[2 * x] : entry[2 * x + 1];
        int ox, oy, ux, uy;
        entry_dir(over & 3, ox, oy);
        entry_dir(under & 3, ux, uy);
        res.writhe += (ox * uy - oy * ux) > 0 ? 1 : -1;
    }
    return res;
}

LaurentPoly jones_bracket_form(const PretzelDiagram& P) {
    const TraceResult tr = trace(build(P));
    const LaurentPoly kb = kb_closed(P);
    const int w = tr.writhe;
    // (-A)^(-3w) = (-1)^w A^(-3w)
    return LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w) * kb;
}

TPoly jones(const PretzelDiagram& P) { return to_t_poly(jones_bracket_form(P)); }

TPoly jones1(const PretzelDiagram& P) {
    const TraceResult tr = trace(build(P));
    if (tr.component_count != 1)
        throw std::domain_error("not a knot: " + std::to_string(tr.component_count) +
                                " components");
    const LaurentPoly kb1 = LaurentPoly::divide_exact(kb_closed(P), LaurentPoly::delta());
    const int w = tr.writhe;
    return to_t_poly(LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w) * kb1);
}

int jones_span(const PretzelDiagram& P) {
    const int s = kb_closed(P).span();
    if (s % 4 != 0) throw std::logic_error("bracket span not divisible by 4");
    return s / 4;
}

}  // namespace pretzel
