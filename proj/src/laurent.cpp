#include "pretzel/laurent.hpp"

#include <sstream>

namespace pretzel {

void LaurentPoly::add_term(int exp, coeff_t coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, coeff);
        return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::monomial(coeff_t coeff, int exp) {
    LaurentPoly p;
    p.add_term(exp, coeff);
    return p;
}

const LaurentPoly& LaurentPoly::delta() {
    static const LaurentPoly d = monomial(-1, -2) + monomial(-1, 2);
    return d;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
    return terms_.rbegin()->first;
}

int LaurentPoly::span() const {
    if (terms_.empty()) throw std::domain_error("span undefined for zero polynomial");
    return max_exp() - min_exp();
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& q) const {
    LaurentPoly r = *this;
    r += q;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& q) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& q) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : q.terms_)
            r.add_term(e1 + e2, checked_mul(c1, c2));
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) {
    *this = *this * q;
    return *this;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("pow requires a nonnegative exponent");
    LaurentPoly r = monomial(1, 0);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return r;
}

LaurentPoly LaurentPoly::mirror() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    if (p.is_zero()) return {};
    // Extreme terms of a product never cancel, so any exact quotient has its
    // lowest exponent pinned at p.min - q.min. Falling below it means the
    // division leaves a remainder (plain leading-term elimination would
    // otherwise descend forever in the Laurent ring).
    const int min_quot_exp = p.min_exp() - q.min_exp();
    LaurentPoly rem = p;
    LaurentPoly quot;
    const auto qlead = *q.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto rlead = *rem.terms_.rbegin();
        const int e = rlead.first - qlead.first;
        if (e < min_quot_exp || rlead.second % qlead.second != 0)
            throw std::domain_error("not divisible");
        const coeff_t c = rlead.second / qlead.second;
        quot.add_term(e, c);
        for (const auto& [qe, qc] : q.terms_)
            rem.add_term(e + qe, checked_mul(-c, qc));
    }
    return quot;
}

namespace {

// shared rendering for A- and t-polynomials
std::string poly_str(const LaurentPoly::term_map& terms, const char* var) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        const std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << mag;
            continue;
        }
        if (mag != 1) out << mag << "*";
        out << var;
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

}  // namespace

std::string LaurentPoly::str() const { return poly_str(terms_, "A"); }

TPoly to_t_poly(const LaurentPoly& p) {
    TPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (e % 4 != 0) throw std::domain_error("non-integral t-degree");
        r.emplace(-e / 4, c);
    }
    return r;
}

TPoly mirror_t(const TPoly& p) {
    TPoly r;
    for (const auto& [e, c] : p) r.emplace(-e, c);
    return r;
}

int span_t(const TPoly& p) {
    if (p.empty()) throw std::domain_error("span undefined for zero polynomial");
    return p.rbegin()->first - p.begin()->first;
}

std::string t_poly_str(const TPoly& p) { return poly_str(p, "t"); }

}  // namespace pretzel
