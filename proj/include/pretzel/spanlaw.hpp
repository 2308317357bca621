#pragma once

#include <string>

#include "pretzel/diagram.hpp"

namespace pretzel {

// Span of the Jones polynomial together with the case of the span law that
// produced it. Labels: "1", "2", "2-exception", "3.1".."3.5", "4.1".."4.4",
// "5.1".."5.6", "5.3-exception", "5.4-exception", "6.1".."6.4",
// "7.1".."7.16", "7.14-exception". mirrored is set when the dispatch had to
// reflect the diagram (the s-lambda=1 branch) before a case applied.
struct SpanVerdict {
    int S = 0;
    std::string case_label;
    bool mirrored = false;
};

// Case analysis for the span of V(P). Requires a reduced diagram with
// entries sorted descending; throws std::invalid_argument otherwise.
SpanVerdict span_formula(const PretzelDiagram& P);

// Sigma - M - 4, with Sigma = M = 0 when the diagram has no entry of
// absolute value > 1. A lower bound for the span except for 2-strand torus
// links.
int lower_bound(const PretzelDiagram& P);

// Parameter bounds a reduced diagram of span S must satisfy:
//   z <= S, r+s <= S/2+3, |lambda| <= max{S/2+2, S-1},
//   |a_i| <= S+4, n <= max{2S+5, (5/2)S+2}.
// Checked in integer arithmetic (inequalities scaled by 2).
bool check_bounds(int S, const PretzelDiagram& P);

}  // namespace pretzel
