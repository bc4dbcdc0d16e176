#pragma once

// Plant/controller interconnection, controller strength and the sublattice
// restriction that defines the degree of autonomy.

#include <cstddef>
#include <vector>

#include "autonomy/behavior.hpp"
#include "autonomy/degree.hpp"

namespace autonomy {

// Coordinate sublattice Z^m -> Z^n picking the (0-based) coordinates `indices`.
class SublatticeEmbedding {
public:
    SublatticeEmbedding(std::size_t n, std::vector<std::size_t> indices);

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return indices_.size(); }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }

private:
    std::size_t n_;
    std::vector<std::size_t> indices_;
};

struct StrengthReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t plant_rows = 0;
    std::size_t controller_rows = 0;
    DegreeValue delta_plant;
    DegreeValue delta_controlled;
    DegreeValue strength;
    DegreeValue generic_bound;
    bool max_efficient = false;

    friend bool operator==(const StrengthReport&, const StrengthReport&) = default;
};

// B ∩ C = B(R + R'): the rows of both matrices stacked.
SystemMatrix interconnect(const SystemMatrix& plant, const SystemMatrix& controller);

// delta(controlled) - delta(plant); infinity for a zero plant or a zero
// controlled system.
DegreeValue strength_value(DegreeValue delta_plant, DegreeValue delta_controlled);

// The strength a generic controller with `controller_rows` laws attains
// against a generic plant with `plant_rows` laws: with s = l + l' - k + 1,
// infinity when s > n, otherwise max(s, 0) for an under-determined plant
// (l < k) and l' for an over-determined one.
DegreeValue generic_strength(std::size_t n, std::size_t k, std::size_t plant_rows,
                             std::size_t controller_rows);

StrengthReport strength(const SystemMatrix& plant, const SystemMatrix& controller);

// Sufficient certificate: the strength reaches the generic bound.
bool is_max_efficient(const SystemMatrix& plant, const SystemMatrix& controller);

// Scalar (k = 1) system restricted to the sublattice: one row per generator
// of the restricted characteristic ideal.
SystemMatrix restrict(const SystemMatrix& m, const SublatticeEmbedding& emb);

// n - m for the largest m such that some m-dimensional coordinate sublattice
// carries a non-autonomous restriction; infinity for the zero behavior.
DegreeValue degree_by_restriction_oracle(const SystemMatrix& m);

}  // namespace autonomy
