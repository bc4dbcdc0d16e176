#pragma once

// Ideals of the Laurent ring A = Q[s1^±1..sn^±1], represented by the
// contraction to A+ of their extension, i.e. the saturation by s1*...*sn.

#include <cstddef>
#include <span>
#include <vector>

#include "autonomy/groebner.hpp"
#include "autonomy/laurent.hpp"

namespace autonomy {

class LaurentIdeal {
public:
    // Zero generators are dropped; a unit generator short-circuits to (1).
    static LaurentIdeal from_gens(std::size_t dim, std::span<const LaurentPoly> gens);
    static LaurentIdeal zero(std::size_t dim);
    static LaurentIdeal unit(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<LaurentPoly>& raw_gens() const noexcept { return raw_gens_; }
    // Reduced grevlex basis of the saturated contraction.
    const GroebnerBasis& saturated_basis() const noexcept { return sat_gb_; }

    bool is_zero() const noexcept { return sat_gb_.is_zero_ideal(); }
    bool is_unit() const { return is_unit_ideal(sat_gb_); }
    // Laurent membership: normalize f into A+ and reduce.
    bool contains(const LaurentPoly& f) const;

    friend bool operator==(const LaurentIdeal& a, const LaurentIdeal& b) {
        return a.dim_ == b.dim_ && a.sat_gb_ == b.sat_gb_;
    }

private:
    LaurentIdeal(std::size_t dim, std::vector<LaurentPoly> raw, GroebnerBasis gb)
        : dim_(dim), raw_gens_(std::move(raw)), sat_gb_(std::move(gb)) {}

    std::size_t dim_;
    std::vector<LaurentPoly> raw_gens_;
    GroebnerBasis sat_gb_;
};

// s1 * s2 * ... * sn.
LaurentPoly torus_product(std::size_t dim);

bool is_proper(const LaurentIdeal& ideal);

// Dimension of the closure of the torus variety; n for the zero ideal.
int torus_dimension(const LaurentIdeal& ideal);

// Whether f is a nonzero divisor on A/I.
bool is_nzd_mod(const LaurentIdeal& ideal, const LaurentPoly& f);

// Length of the longest prefix a1..ai that is a regular sequence in A.
std::size_t regular_prefix_length(std::size_t dim, std::span<const LaurentPoly> seq);
bool is_regular_sequence(std::size_t dim, std::span<const LaurentPoly> seq);

// n - torus_dimension: codimension of the characteristic variety.
int height(const LaurentIdeal& ideal);

// I ∩ Q[s_i^±1 : i in keep], written in |keep| variables (ordered as `keep`).
LaurentIdeal restrict_ideal(const LaurentIdeal& ideal, std::span<const std::size_t> keep);

}  // namespace autonomy
