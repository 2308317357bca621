#pragma once

#include "pretzel/diagram.hpp"
#include "pretzel/laurent.hpp"

namespace pretzel {

// The quantum-like bracket [a]:
//   [0] = 0,  [a] = A^(-2a/|a| - 3a) * sum_{i=1..|a|} (-1)^(a+i) A^(4ia/|a|).
// Satisfies delta*[a] = -A^a + (-A^-3)^a and the one-step recurrences
// [a] = A[a-1] + A^-1(-A^-3)^(a-1) for a>0, [a] = A^-1[a+1] + A(-A^3)^(-a-1)
// for a<0 (tested, not used as the code path).
LaurentPoly qbracket(int a);

// Kauffman bracket of P(a1,...,an), normalization <unknot> = delta, via the
// closed product formula
//   <P> = prod_i (A^(a_i) delta + [a_i]) + (delta^2 - 1) prod_i [a_i].
LaurentPoly kb_closed(const PretzelDiagram& P);

// Same value through the entry-elimination recurrence
//   <P(...,a,...)> = A^a <P(...,0,...)> + [a] <P(...)>
// with bases <P(a)> = delta(-A^-3)^a and <P(0,...,0)> = delta^n.
// Memoized on the sorted entry multiset (the bracket is permutation
// invariant), memo confined to the call.
LaurentPoly kb_recursive(const PretzelDiagram& P);

}  // namespace pretzel
