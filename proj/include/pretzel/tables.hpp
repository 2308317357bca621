#pragma once

#include <string>
#include <vector>

#include "pretzel/census.hpp"
#include "pretzel/diagram.hpp"
#include "pretzel/laurent.hpp"

namespace pretzel {

// one knot-table row: V1 as an integer polynomial in t
struct KnotRecord {
    std::string name;
    int crossings = 0;
    bool alternating = false;
    TPoly v1;
};

// JSON lines, one record each:
//   {"name":"8_21","crossings":8,"alternating":false,
//    "v1":{"min_deg":1,"coeffs":[2,-2,3,-3,2,-2,1]}}
// coeffs ascend from min_deg. Throws std::runtime_error with the offending
// line number on malformed input and on duplicate names.
std::vector<KnotRecord> load_table(const std::string& path);

enum class Verdict { NOT_PRETZEL, CANDIDATES };

struct ClassificationReport {
    std::string name;
    int span_V = 0;  // 1 + span of v1
    std::vector<PretzelDiagram> candidates;  // canonical forms, census order
    Verdict verdict = Verdict::NOT_PRETZEL;
};

// For each record: take the knot census of its span and keep the diagrams
// whose V1 equals the record's, exactly or with t inverted. A CANDIDATES
// verdict asserts Jones coincidence only, not knot equality.
std::vector<ClassificationReport> classify(const std::vector<KnotRecord>& records,
                                           int jobs = 0);

std::string render_text(const std::vector<ClassificationReport>& reports);
std::string render_json(const std::vector<ClassificationReport>& reports);

}  // namespace pretzel
