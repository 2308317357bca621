#pragma once

#include <utility>
#include <vector>

#include "pretzel/diagram.hpp"
#include "pretzel/laurent.hpp"

namespace pretzel {

// Crossing-level encoding of a pretzel diagram. Each crossing has four ports,
// numbered 4c+0..4c+3 for top-left, top-right, bottom-left, bottom-right; the
// two strands run TL<->BR and TR<->BL. Arcs pair up ports (column wiring plus
// the top and bottom closing strands); columns with a_i = 0 contribute no
// ports and may close into circles with no crossings at all, counted
// separately as free circles.
//
// Over/under convention: in a column with a_i > 0 the TR->BL strand is the
// over strand, for a_i < 0 the TL->BR strand. This normalizes P(a), a > 0,
// to the unknot with a negative kinks (bracket factor -A^-3 per kink).
class PlanarDiagram {
public:
    struct Crossing {
        int column;
        bool positive;  // sign of the column entry
    };

    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int free_circles() const { return free_circles_; }

private:
    friend PlanarDiagram build(const PretzelDiagram&);
    std::vector<Crossing> crossings_;
    std::vector<std::pair<int, int>> arcs_;
    int free_circles_ = 0;
};

PlanarDiagram build(const PretzelDiagram& P);

// Kauffman bracket by brute force over all 2^c resolutions, normalization
// <unknot> = delta. Independent of the closed formula; used as oracle.
// Throws "state sum too large" above the crossing cap (default 20,
// overridable via the PRETZEL_MAX_STATE_SUM environment variable).
LaurentPoly state_sum(const PlanarDiagram& pd);
LaurentPoly state_sum(const PlanarDiagram& pd, int max_crossings);
int state_sum_limit();

struct TraceResult {
    int component_count = 0;
    int writhe = 0;  // orientation-dependent when component_count > 1
    // traversal direction per arc: +1 means first->second of the stored pair
    std::vector<int> arc_direction;
};

// Walks the strands, orienting each component from its lowest port, and sums
// crossing signs under that orientation.
TraceResult trace(const PlanarDiagram& pd);

// (-A)^(-3w) <P> in the variable A; defined for links (writhe from trace).
LaurentPoly jones_bracket_form(const PretzelDiagram& P);

// Jones polynomials in t. jones gives V with normalization V(unknot) =
// -t^-1/2 - t^1/2; its t-exponents are integral exactly for links with an
// even number of components, otherwise to_t_poly's "non-integral t-degree"
// propagates (use jones_bracket_form for the exact A-form). jones1 gives V1
// with V1(unknot) = 1, via exact division by delta before substituting
// A = t^-1/4; integral precisely for knots, so it throws "not a knot" on
// multi-component input.
TPoly jones(const PretzelDiagram& P);
TPoly jones1(const PretzelDiagram& P);

// span(V) = span(<P>)/4, orientation-free, defined for every diagram.
int jones_span(const PretzelDiagram& P);

}  // namespace pretzel
