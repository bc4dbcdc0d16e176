#include "autonomy/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "autonomy/errors.hpp"

namespace autonomy {

namespace {

void check_dim(std::size_t dim) {
    if (dim > kMaxVariables)
        throw PreconditionError("at most " + std::to_string(kMaxVariables) +
                                " variables are supported, got " + std::to_string(dim));
}

void check_same_dim(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.dim() != q.dim()) throw DimensionMismatch(p.dim(), q.dim());
}

// Sorts descending and merges like terms in place.
void canonicalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Rational c = terms[i].coeff;
        while (j < terms.size() && terms[j].monomial == terms[i].monomial) c += terms[j++].coeff;
        if (c != 0) {
            terms[out].monomial = terms[i].monomial;
            terms[out].coeff = std::move(c);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

}  // namespace

ExponentVector::ExponentVector(std::size_t dim) {
    check_dim(dim);
    size_ = static_cast<std::uint8_t>(dim);
}

ExponentVector::ExponentVector(std::initializer_list<int> exps)
    : ExponentVector(std::span<const int>(exps.begin(), exps.size())) {}

ExponentVector::ExponentVector(std::span<const int> exps) : ExponentVector(exps.size()) {
    std::copy(exps.begin(), exps.end(), e_.begin());
}

int ExponentVector::abs_degree() const noexcept {
    int d = 0;
    for (std::size_t i = 0; i < size_; ++i) d += std::abs(e_[i]);
    return d;
}

int ExponentVector::total_degree() const noexcept {
    int d = 0;
    for (std::size_t i = 0; i < size_; ++i) d += e_[i];
    return d;
}

bool ExponentVector::is_nonnegative() const noexcept {
    return std::all_of(begin(), end(), [](int x) { return x >= 0; });
}

bool ExponentVector::is_zero() const noexcept {
    return std::all_of(begin(), end(), [](int x) { return x == 0; });
}

ExponentVector ExponentVector::min(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    return r;
}

ExponentVector ExponentVector::max(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
}

ExponentVector ExponentVector::operator-() const {
    ExponentVector r(size_);
    for (std::size_t i = 0; i < size_; ++i) r.e_[i] = -e_[i];
    return r;
}

bool operator==(const Term& a, const Term& b) {
    return a.monomial == b.monomial && a.coeff == b.coeff;
}

LaurentPoly::LaurentPoly(std::size_t dim) : dim_(dim) { check_dim(dim); }

LaurentPoly LaurentPoly::constant(std::size_t dim, const Rational& c) {
    return monomial(c, ExponentVector(dim));
}

LaurentPoly LaurentPoly::monomial(const Rational& c, const ExponentVector& e) {
    LaurentPoly p(e.size());
    if (c != 0) p.terms_.push_back({c, e});
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t dim, std::size_t index) {
    if (index >= dim)
        throw PreconditionError("variable index " + std::to_string(index + 1) +
                                " out of range for " + std::to_string(dim) + " variables");
    ExponentVector e(dim);
    e[index] = 1;
    return monomial(1, e);
}

LaurentPoly LaurentPoly::from_terms(std::size_t dim, std::vector<Term> terms) {
    LaurentPoly p(dim);
    for (const Term& t : terms)
        if (t.monomial.size() != dim) throw DimensionMismatch(dim, t.monomial.size());
    canonicalize(terms);
    p.terms_ = std::move(terms);
    return p;
}

bool LaurentPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_zero());
}

Rational LaurentPoly::coefficient(const ExponentVector& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const ExponentVector& m) { return t.monomial > m; });
    if (it != terms_.end() && it->monomial == e) return it->coeff;
    return 0;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
    check_same_dim(*this, q);
    std::vector<Term> out;
    out.reserve(terms_.size() + q.terms_.size());
    auto a = terms_.begin();
    auto b = q.terms_.begin();
    while (a != terms_.end() || b != q.terms_.end()) {
        if (b == q.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->monomial > a->monomial) {
            out.push_back(*b++);
        } else {
            Rational c = a->coeff + b->coeff;
            if (c != 0) out.push_back({std::move(c), a->monomial});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) { return *this += -q; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) { return *this = *this * q; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (Term& t : terms_) t.coeff *= c;
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    check_same_dim(p, q);
    std::vector<Term> prod;
    prod.reserve(p.terms_.size() * q.terms_.size());
    for (const Term& s : p.terms_)
        for (const Term& t : q.terms_) prod.push_back({s.coeff * t.coeff, s.monomial + t.monomial});
    LaurentPoly r(p.dim_);
    canonicalize(prod);
    r.terms_ = std::move(prod);
    return r;
}

LaurentPoly LaurentPoly::shifted(const ExponentVector& shift) const {
    if (shift.size() != dim_) throw DimensionMismatch(dim_, shift.size());
    LaurentPoly r = *this;
    // Translation preserves lexicographic order.
    for (Term& t : r.terms_) t.monomial = t.monomial + shift;
    return r;
}

LaurentPoly LaurentPoly::monic() const {
    if (is_zero()) return *this;
    return *this * Rational(1 / terms_.front().coeff);
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

int degree(const LaurentPoly& p) {
    int d = kMinusInfinity;
    for (const Term& t : p.terms()) d = std::max(d, t.monomial.abs_degree());
    return d;
}

bool is_unit(const LaurentPoly& p) { return p.size() == 1; }

LaurentPoly inverse_unit(const LaurentPoly& p) {
    if (!is_unit(p)) throw PreconditionError("only single-term Laurent polynomials are invertible");
    const Term& t = p.terms().front();
    return LaurentPoly::monomial(Rational(1 / t.coeff), -t.monomial);
}

LaurentPoly pow(const LaurentPoly& p, int e) {
    if (e < 0) return pow(inverse_unit(p), -e);
    LaurentPoly result = LaurentPoly::constant(p.dim(), 1);
    LaurentPoly base = p;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

PolyNormalization normalize(const LaurentPoly& p) {
    if (p.is_zero()) throw PreconditionError("cannot normalize the zero polynomial");
    ExponentVector shift = p.terms().front().monomial;
    for (const Term& t : p.terms()) shift = ExponentVector::min(shift, t.monomial);
    return {p.shifted(-shift), shift};
}

std::uint64_t count_monomials(std::size_t n, std::size_t d) {
    // C(n,j) and C(d,j) computed exactly; overflow is a caller error at these sizes.
    std::uint64_t total = 0;
    std::uint64_t binom_n = 1;  // C(n, j)
    std::uint64_t binom_d = 1;  // C(d, j)
    std::uint64_t two_j = 1;
    for (std::size_t j = 0; j <= n; ++j) {
        if (j > d) break;
        std::uint64_t term = 0;
        if (__builtin_mul_overflow(two_j, binom_n, &term) ||
            __builtin_mul_overflow(term, binom_d, &term) ||
            __builtin_add_overflow(total, term, &total))
            throw PreconditionError("count_monomials overflows 64 bits");
        binom_n = binom_n * (n - j) / (j + 1);
        binom_d = binom_d * (d - j) / (j + 1);
        two_j *= 2;
    }
    return total;
}

std::vector<ExponentVector> monomials_up_to(std::size_t n, std::size_t d) {
    std::vector<ExponentVector> out;
    ExponentVector e(n);
    const int bound = static_cast<int>(d);
    // Recursive fill, each coordinate taking values in ascending order.
    auto fill = [&](auto&& self, std::size_t i, int budget) -> void {
        if (i == n) {
            out.push_back(e);
            return;
        }
        for (int v = -budget; v <= budget; ++v) {
            e[i] = v;
            self(self, i + 1, budget - std::abs(v));
        }
        e[i] = 0;
    };
    fill(fill, 0, bound);
    return out;
}

}  // namespace autonomy
