#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pretzel {

// Pretzel diagram P(a1,...,an): n vertical twist columns, column i holding
// |a_i| crossings of sign a_i/|a_i|, closed by a top and a bottom strand.
class PretzelDiagram {
public:
    explicit PretzelDiagram(std::vector<int> entries);
    static PretzelDiagram parse(const std::string& text);  // "2,-3,-4"

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }

    std::string str() const;          // "(2,-3,-4)"
    std::string entry_str() const;    // "2,-3,-4"

    bool operator==(const PretzelDiagram& o) const { return entries_ == o.entries_; }
    bool operator!=(const PretzelDiagram& o) const { return entries_ != o.entries_; }
    bool operator<(const PretzelDiagram& o) const { return entries_ < o.entries_; }

private:
    std::vector<int> entries_;
};

struct DiagramParams {
    int r = 0;       // entries > 1
    int s = 0;       // entries < -1
    int z = 0;       // zero entries
    int alpha = 0;   // entries equal to 1
    int beta = 0;    // entries equal to -1
    int lambda = 0;  // alpha - beta
    int Sigma = 0;   // sum of |a_i| over |a_i| > 1
    std::optional<int> M;  // min |a_i| over |a_i| > 1, absent when r+s = 0
};

DiagramParams params(const PretzelDiagram& P);

// Reduced: P = (1,-1) in either order, or no mixed +-1 pair and, when a zero
// entry is present, no +-1 entries at all.
bool is_reduced(const PretzelDiagram& P);

// Cancels (1,-1) pairs and, in the presence of a zero entry, deletes +-1
// entries, until reduced. Link type and Jones polynomial are preserved.
// (1,-1) itself is already reduced and comes back unchanged; if every entry
// were consumed the unknot residue (0) is returned.
PretzelDiagram reduce(const PretzelDiagram& P);

PretzelDiagram sort_desc(const PretzelDiagram& P);
PretzelDiagram mirror(const PretzelDiagram& P);

// Dedup key for the orbit under entry permutation and mirror image: the
// lexicographically greater of sort_desc(P) and sort_desc(mirror(P)).
PretzelDiagram canonical(const PretzelDiagram& P);

// Component parity rule: a pretzel diagram closes to a knot iff exactly one
// entry is even (0 counts as even), or no entry is even and n is odd.
bool is_knot(const PretzelDiagram& P);

}  // namespace pretzel
