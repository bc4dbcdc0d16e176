#pragma once

// Groebner bases over the polynomial ring A+ = Q[s1..sn]. Inputs are
// LaurentPoly values whose exponents are all non-negative.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "autonomy/laurent.hpp"

namespace autonomy {

class MonomialOrder {
public:
    enum class Kind { GradedReverseLex, Lex, Block };

    static MonomialOrder grevlex();
    static MonomialOrder lex();
    // Monomials are compared first by grevlex restricted to `elim_block`,
    // ties broken by `inner`. Any monomial involving a block variable is
    // larger than every monomial free of them.
    static MonomialOrder block(std::span<const std::size_t> elim_block, const MonomialOrder& inner);

    Kind kind() const noexcept { return kind_; }
    std::vector<std::size_t> elim_block() const;
    const MonomialOrder* inner() const noexcept { return inner_.get(); }

    std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const noexcept;
    bool greater(const ExponentVector& a, const ExponentVector& b) const noexcept {
        return compare(a, b) > 0;
    }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);

private:
    MonomialOrder(Kind kind, std::uint32_t mask, std::shared_ptr<const MonomialOrder> inner)
        : kind_(kind), elim_mask_(mask), inner_(std::move(inner)) {}

    Kind kind_;
    std::uint32_t elim_mask_ = 0;
    std::shared_ptr<const MonomialOrder> inner_;
};

// A reduced Groebner basis: monic generators, no leading monomial dividing a
// monomial of another generator, sorted ascending by leading monomial. For a
// fixed order this is unique, so operator== decides ideal equality.
struct GroebnerBasis {
    std::size_t dim = 1;
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<LaurentPoly> gens;

    bool is_zero_ideal() const noexcept { return gens.empty(); }
    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return a.dim == b.dim && a.order == b.order && a.gens == b.gens;
    }
};

// Leading monomial/term of a nonzero polynomial under `order`.
ExponentVector leading_monomial(const LaurentPoly& p, const MonomialOrder& order);
Rational leading_coefficient(const LaurentPoly& p, const MonomialOrder& order);

// Reads AUTONOMY_GB_STEP_LIMIT; nullopt when unset or empty.
std::optional<std::size_t> step_limit_from_env();

// Reduced Groebner basis of the ideal generated by `gens`. Every run is
// bounded by AUTONOMY_GB_STEP_LIMIT reduction steps when that variable is set.
GroebnerBasis buchberger(std::size_t dim, std::span<const LaurentPoly> gens,
                         const MonomialOrder& order = MonomialOrder::grevlex());

LaurentPoly s_polynomial(const LaurentPoly& f, const LaurentPoly& g, const MonomialOrder& order);

// Remainder of p on division by gb; zero iff p lies in the ideal.
LaurentPoly normal_form(const LaurentPoly& p, const GroebnerBasis& gb);

bool contains(const GroebnerBasis& gb, const LaurentPoly& p);

// Checks that every S-polynomial of gb.gens reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);
// Checks monic + no leading monomial divides any monomial of another generator.
bool is_reduced(const GroebnerBasis& gb);

// (I : f) = {g : g f in I}, via I ∩ (f) divided by f.
GroebnerBasis ideal_quotient(const GroebnerBasis& ideal, const LaurentPoly& f);

// (I : f^inf). A monomial f goes through the homogenization and per-variable
// grevlex bases; anything else eliminates t from I + (1 - t f).
GroebnerBasis saturate(const GroebnerBasis& ideal, const LaurentPoly& f);
// Same, starting from arbitrary generators (saves one Groebner run).
GroebnerBasis saturate_generators(std::size_t dim, std::span<const LaurentPoly> gens,
                                  const LaurentPoly& f);

// I ∩ Q[s_i : i not in drop], still written in `dim` variables.
GroebnerBasis eliminate(const GroebnerBasis& ideal, std::span<const std::size_t> drop);

bool is_unit_ideal(const GroebnerBasis& gb);

// Krull dimension of A+/I: the largest set of variables containing the
// support of no leading monomial.
int dimension(const GroebnerBasis& gb);

// Exact quotient p / f in A+; throws PreconditionError when f does not divide p.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& f);

}  // namespace autonomy
