#include "pretzel/bracket.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace pretzel {

namespace {

// (-A^e)^k for any integer k, as a monomial
LaurentPoly neg_power(int e, int k) {
    return LaurentPoly::monomial(k % 2 == 0 ? 1 : -1, e * k);
}

}  // namespace

LaurentPoly qbracket(int a) {
    if (a == 0) return {};
    const int sg = a > 0 ? 1 : -1;
    const int base = -2 * sg - 3 * a;
    LaurentPoly r;
    for (int i = 1; i <= sg * a; ++i) {
        const int coeff = (a + i) % 2 == 0 ? 1 : -1;
        r += LaurentPoly::monomial(coeff, base + 4 * i * sg);
    }
    return r;
}

LaurentPoly kb_closed(const PretzelDiagram& P) {
    const LaurentPoly& d = LaurentPoly::delta();
    LaurentPoly head = LaurentPoly::monomial(1, 0);
    LaurentPoly tail = LaurentPoly::monomial(1, 0);
    for (int a : P.entries()) {
        const LaurentPoly qa = qbracket(a);
        head *= LaurentPoly::monomial(1, a) * d + qa;
        tail *= qa;
    }
    return head + (d * d - LaurentPoly::monomial(1, 0)) * tail;
}

namespace {

using Memo = std::map<std::vector<int>, LaurentPoly>;

const LaurentPoly& kb_rec(std::vector<int> key, Memo& memo) {
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const LaurentPoly& d = LaurentPoly::delta();
    LaurentPoly value;
    auto nz = std::find_if(key.begin(), key.end(), [](int a) { return a != 0; });
    if (nz == key.end()) {
        value = d.pow(static_cast<int>(key.size()));
    } else if (key.size() == 1) {
        value = d * neg_power(-3, key[0]);
    } else {
        const int a = *nz;
        std::vector<int> zeroed = key;
        zeroed[nz - key.begin()] = 0;
        std::sort(zeroed.begin(), zeroed.end(), std::greater<int>());
        std::vector<int> dropped = key;
        dropped.erase(dropped.begin() + (nz - key.begin()));
        value = LaurentPoly::monomial(1, a) * kb_rec(std::move(zeroed), memo) +
                qbracket(a) * kb_rec(std::move(dropped), memo);
    }
    return memo.emplace(std::move(key), std::move(value)).first->second;
}

}  // namespace

LaurentPoly kb_recursive(const PretzelDiagram& P) {
    std::vector<int> key = P.entries();
    std::sort(key.begin(), key.end(), std::greater<int>());
    Memo memo;
    return kb_rec(std::move(key), memo);
}

}  // namespace pretzel
