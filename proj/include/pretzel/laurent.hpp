#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace pretzel {

// Checked 64-bit arithmetic. Census coefficients stay far below 2^63 at desk
// scale, but a silent wrap would corrupt results, so overflow always throws.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("coefficient overflow in add");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("coefficient overflow in mul");
    return r;
}

// Exact integer-coefficient Laurent polynomial in the bracket variable A.
// Terms are kept ordered by exponent with no zero coefficients, so equality,
// printing and iteration are canonical. Values are immutable in spirit: all
// operations return fresh polynomials.
class LaurentPoly {
public:
    using coeff_t = std::int64_t;
    using term_map = std::map<int, coeff_t>;

    LaurentPoly() = default;  // zero polynomial

    static LaurentPoly monomial(coeff_t coeff, int exp);
    static const LaurentPoly& delta();  // -A^-2 - A^2

    bool is_zero() const { return terms_.empty(); }
    const term_map& terms() const { return terms_; }

    // lowest/highest exponent; zero polynomial has neither
    int min_exp() const;
    int max_exp() const;
    int span() const;  // max_exp - min_exp, throws on zero

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& q) const;
    LaurentPoly operator-(const LaurentPoly& q) const;
    LaurentPoly operator*(const LaurentPoly& q) const;
    LaurentPoly& operator+=(const LaurentPoly& q);
    LaurentPoly& operator*=(const LaurentPoly& q);
    bool operator==(const LaurentPoly& q) const { return terms_ == q.terms_; }
    bool operator!=(const LaurentPoly& q) const { return terms_ != q.terms_; }

    LaurentPoly pow(int k) const;  // k >= 0
    LaurentPoly mirror() const;    // A -> A^-1

    // exact quotient p/q; throws "not divisible" if remainder is nonzero
    static LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q);

    // increasing exponents, coefficient 1 elided, A^0 elided, e.g. -A^-2 - A^2
    std::string str() const;

private:
    void add_term(int exp, coeff_t coeff);
    term_map terms_;
};

inline LaurentPoly delta() { return LaurentPoly::delta(); }

// Integer Laurent polynomial in t (the Jones variable). Kept as a plain
// ordered map; all nontrivial arithmetic happens on the A side.
using TPoly = std::map<int, std::int64_t>;

// A-polynomial to t-polynomial under A = t^-1/4: exponent e becomes -e/4.
// Throws "non-integral t-degree" unless every exponent is divisible by 4.
TPoly to_t_poly(const LaurentPoly& p);

TPoly mirror_t(const TPoly& p);            // t -> t^-1
int span_t(const TPoly& p);                // throws on zero
std::string t_poly_str(const TPoly& p);    // same format with variable t

}  // namespace pretzel
