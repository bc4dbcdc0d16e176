#pragma once

// Sparse Laurent polynomials over Q in n variables s1..sn with integer
// (possibly negative) exponents.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

namespace autonomy {

using Rational = mpq_class;
using Integer = mpz_class;

// Upper bound on the number of variables, including the auxiliary variable
// used internally by saturation and elimination.
inline constexpr std::size_t kMaxVariables = 16;

// degree() of the zero polynomial.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t dim);
    ExponentVector(std::initializer_list<int> exps);
    explicit ExponentVector(std::span<const int> exps);

    std::size_t size() const noexcept { return size_; }
    int operator[](std::size_t i) const noexcept { return e_[i]; }
    int& operator[](std::size_t i) noexcept { return e_[i]; }

    const int* begin() const noexcept { return e_.data(); }
    const int* end() const noexcept { return e_.data() + size_; }

    // Sum of absolute values: the Laurent degree |d1| + ... + |dn|.
    int abs_degree() const noexcept;
    // Plain sum d1 + ... + dn (the usual degree on A+ monomials).
    int total_degree() const noexcept;
    bool is_nonnegative() const noexcept;
    bool is_zero() const noexcept;

    // Componentwise min/max, used for shifts and lcms.
    static ExponentVector min(const ExponentVector& a, const ExponentVector& b);
    static ExponentVector max(const ExponentVector& a, const ExponentVector& b);

    friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
    friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);
    ExponentVector operator-() const;

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept {
        return a.size_ == b.size_ && a.e_ == b.e_;
    }
    // Lexicographic on the exponents (s1 most significant).
    friend std::strong_ordering operator<=>(const ExponentVector& a,
                                            const ExponentVector& b) noexcept {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        for (std::size_t i = 0; i < a.size_; ++i)
            if (auto c = a.e_[i] <=> b.e_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    std::array<int, kMaxVariables> e_{};
    std::uint8_t size_ = 0;
};

struct Term {
    Rational coeff;
    ExponentVector monomial;
};

bool operator==(const Term& a, const Term& b);

class LaurentPoly {
public:
    // The zero polynomial in `dim` variables.
    explicit LaurentPoly(std::size_t dim = 1);

    static LaurentPoly constant(std::size_t dim, const Rational& c);
    static LaurentPoly monomial(const Rational& c, const ExponentVector& e);
    // s_{index+1}; index is 0-based.
    static LaurentPoly variable(std::size_t dim, std::size_t index);
    // Combines like terms and drops zero coefficients.
    static LaurentPoly from_terms(std::size_t dim, std::vector<Term> terms);

    std::size_t dim() const noexcept { return dim_; }
    // Terms sorted by exponent vector, lexicographically descending.
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    // Coefficient of the monomial `e`, zero when absent.
    Rational coefficient(const ExponentVector& e) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& q);
    LaurentPoly& operator-=(const LaurentPoly& q);
    LaurentPoly& operator*=(const LaurentPoly& q);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator*(LaurentPoly p, const Rational& c) { return p *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly p) { return p *= c; }

    friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
        return p.dim_ == q.dim_ && p.terms_ == q.terms_;
    }

    // Multiply every term by s^shift.
    LaurentPoly shifted(const ExponentVector& shift) const;
    // Divide through by the leading coefficient (in the canonical term order).
    LaurentPoly monic() const;

private:
    std::size_t dim_;
    std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

// Maximum of |d1|+...+|dn| over the support; kMinusInfinity for zero.
int degree(const LaurentPoly& p);

// Units of A are exactly the nonzero single terms.
bool is_unit(const LaurentPoly& p);
LaurentPoly inverse_unit(const LaurentPoly& p);

// p^e; negative e only for units.
LaurentPoly pow(const LaurentPoly& p, int e);

struct PolyNormalization {
    LaurentPoly poly_part;
    ExponentVector shift;
};

// Writes p = s^shift * poly_part with poly_part in A+ and not divisible by any
// variable.
PolyNormalization normalize(const LaurentPoly& p);

// Number of Laurent monomials in n variables with |d1|+...+|dn| <= d:
// sum_j 2^j C(n,j) C(d,j).
std::uint64_t count_monomials(std::size_t n, std::size_t d);

// All exponent vectors with |d1|+...+|dn| <= d, in ascending lex order.
std::vector<ExponentVector> monomials_up_to(std::size_t n, std::size_t d);

}  // namespace autonomy
