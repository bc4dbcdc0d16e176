#include "autonomy/laurent_ideal.hpp"

#include <algorithm>

#include "autonomy/errors.hpp"

namespace autonomy {

LaurentPoly torus_product(std::size_t dim) {
    ExponentVector e(dim);
    for (std::size_t i = 0; i < dim; ++i) e[i] = 1;
    return LaurentPoly::monomial(1, e);
}

LaurentIdeal LaurentIdeal::zero(std::size_t dim) {
    return LaurentIdeal(dim, {}, GroebnerBasis{dim, MonomialOrder::grevlex(), {}});
}

LaurentIdeal LaurentIdeal::unit(std::size_t dim) {
    LaurentPoly one = LaurentPoly::constant(dim, 1);
    return LaurentIdeal(dim, {one}, GroebnerBasis{dim, MonomialOrder::grevlex(), {one}});
}

LaurentIdeal LaurentIdeal::from_gens(std::size_t dim, std::span<const LaurentPoly> gens) {
    std::vector<LaurentPoly> raw;
    std::vector<LaurentPoly> parts;
    for (const LaurentPoly& g : gens) {
        if (g.dim() != dim) throw DimensionMismatch(dim, g.dim());
        if (g.is_zero()) continue;
        raw.push_back(g);
        if (autonomy::is_unit(g)) {
            LaurentIdeal u = unit(dim);
            u.raw_gens_ = std::move(raw);
            return u;
        }
        parts.push_back(normalize(g).poly_part);
    }
    if (parts.empty()) return zero(dim);
    GroebnerBasis gb = parts.size() == 1
                           // A principal ideal (f) with f divisible by no
                           // variable is already saturated.
                           ? buchberger(dim, parts)
                           : saturate_generators(dim, parts, torus_product(dim));
    return LaurentIdeal(dim, std::move(raw), std::move(gb));
}

bool LaurentIdeal::contains(const LaurentPoly& f) const {
    if (f.dim() != dim_) throw DimensionMismatch(dim_, f.dim());
    if (f.is_zero()) return true;
    return normal_form(normalize(f).poly_part, sat_gb_).is_zero();
}

bool is_proper(const LaurentIdeal& ideal) { return !ideal.is_unit(); }

int torus_dimension(const LaurentIdeal& ideal) {
    if (!is_proper(ideal)) throw PreconditionError("torus dimension of the unit ideal is undefined");
    return dimension(ideal.saturated_basis());
}

bool is_nzd_mod(const LaurentIdeal& ideal, const LaurentPoly& f) {
    if (f.dim() != ideal.dim()) throw DimensionMismatch(ideal.dim(), f.dim());
    if (f.is_zero()) throw PreconditionError("zero is never a nonzero divisor");
    if (!is_proper(ideal)) throw PreconditionError("nonzero-divisor test needs a proper ideal");
    if (ideal.is_zero()) return true;  // A is a domain
    // Quotients commute with localization, and the saturated contraction is
    // the unique representative.
    return ideal_quotient(ideal.saturated_basis(), normalize(f).poly_part) == ideal.saturated_basis();
}

std::size_t regular_prefix_length(std::size_t dim, std::span<const LaurentPoly> seq) {
    LaurentIdeal before = LaurentIdeal::zero(dim);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const LaurentPoly& a = seq[i];
        if (a.dim() != dim) throw DimensionMismatch(dim, a.dim());
        if (a.is_zero()) return i;
        LaurentIdeal with = LaurentIdeal::from_gens(dim, seq.first(i + 1));
        if (!is_proper(with)) return i;
        if (!is_nzd_mod(before, a)) return i;
        before = std::move(with);
    }
    return seq.size();
}

bool is_regular_sequence(std::size_t dim, std::span<const LaurentPoly> seq) {
    if (seq.empty()) throw PreconditionError("regular sequence test needs a nonempty sequence");
    return regular_prefix_length(dim, seq) == seq.size();
}

int height(const LaurentIdeal& ideal) {
    if (ideal.is_zero()) throw PreconditionError("height of the zero ideal is not reported");
    if (!is_proper(ideal)) throw PreconditionError("height of the unit ideal is undefined");
    return static_cast<int>(ideal.dim()) - torus_dimension(ideal);
}

LaurentIdeal restrict_ideal(const LaurentIdeal& ideal, std::span<const std::size_t> keep) {
    const std::size_t n = ideal.dim();
    for (std::size_t j = 0; j < keep.size(); ++j) {
        if (keep[j] >= n) throw PreconditionError("sublattice index out of range");
        if (j > 0 && keep[j] <= keep[j - 1])
            throw PreconditionError("sublattice indices must be strictly increasing");
    }
    const std::size_t m = keep.size();
    if (ideal.is_zero()) return LaurentIdeal::zero(m);
    if (ideal.is_unit()) return LaurentIdeal::unit(m);

    std::vector<std::size_t> drop;
    for (std::size_t i = 0; i < n; ++i)
        if (std::find(keep.begin(), keep.end(), i) == keep.end()) drop.push_back(i);
    GroebnerBasis elim = eliminate(ideal.saturated_basis(), drop);

    std::vector<LaurentPoly> projected;
    for (const LaurentPoly& g : elim.gens) {
        std::vector<Term> terms;
        for (const Term& t : g.terms()) {
            ExponentVector e(m);
            for (std::size_t j = 0; j < m; ++j) e[j] = t.monomial[keep[j]];
            terms.push_back({t.coeff, e});
        }
        projected.push_back(LaurentPoly::from_terms(m, std::move(terms)));
    }
    return LaurentIdeal::from_gens(m, projected);
}

}  // namespace autonomy
