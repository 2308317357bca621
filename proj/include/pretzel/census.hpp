#pragma once

#include <string>
#include <vector>

#include "pretzel/diagram.hpp"
#include "pretzel/spanlaw.hpp"

namespace pretzel {

struct CensusEntry {
    PretzelDiagram diagram;  // canonical form, sorted descending
    SpanVerdict verdict;
    bool knot = false;
};

// Complete list of reduced pretzel diagrams with span S, one per canonical
// class, sorted by (case label, entries). Generation sweeps every diagram
// allowed by the parameter bounds; diagrams whose case is in the torus or
// trivial families (3.2, 3.3, 4.*, 6.1, 6.2, 7.*) are dropped, since those
// links already appear with a type-1 representative. knots_only keeps
// single-component diagrams. jobs = 0 picks hardware concurrency.
std::vector<CensusEntry> enumerate(int S, bool knots_only, int jobs = 0);

// Same sweep with the span computed from the bracket polynomial instead of
// the case analysis. Guarded to S <= 12; throws std::domain_error above.
std::vector<CensusEntry> brute_census(int S, bool knots_only, int jobs = 0);

// Entry sum cap used by the sweep: span >= Sigma - M - 4 and M <= S + 4
// give Sigma <= 2S + 8 for every diagram the census may keep.
inline int sigma_cap(int S) { return 2 * S + 8; }

bool excluded_label(const std::string& case_label);

std::string render_text(const std::vector<CensusEntry>& entries);
std::string render_json(const std::vector<CensusEntry>& entries);

}  // namespace pretzel
