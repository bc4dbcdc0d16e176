#include "autonomy/control.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "autonomy/errors.hpp"
#include "autonomy/laurent_ideal.hpp"

namespace autonomy {

namespace {

void check_compatible(const SystemMatrix& plant, const SystemMatrix& controller) {
    if (plant.n() != controller.n() || plant.k() != controller.k())
        throw ValidationError("plant is " + std::to_string(plant.n()) + "-D with k=" + std::to_string(plant.k()) +
                              " but controller is " + std::to_string(controller.n()) +
                              "-D with k=" + std::to_string(controller.k()));
}

void require_scalar(const SystemMatrix& m) {
    if (m.k() != 1)
        throw PreconditionError("sublattice restriction is only implemented for scalar systems (k = 1), got k = " +
                                std::to_string(m.k()));
}

}  // namespace

SublatticeEmbedding::SublatticeEmbedding(std::size_t n, std::vector<std::size_t> indices)
    : n_(n), indices_(std::move(indices)) {
    for (std::size_t j = 0; j < indices_.size(); ++j) {
        if (indices_[j] >= n_)
            throw PreconditionError("sublattice index " + std::to_string(indices_[j] + 1) + " exceeds n = " +
                                    std::to_string(n_));
        if (j > 0 && indices_[j] <= indices_[j - 1])
            throw PreconditionError("sublattice indices must be strictly increasing");
    }
}

SystemMatrix interconnect(const SystemMatrix& plant, const SystemMatrix& controller) {
    check_compatible(plant, controller);
    SystemMatrix out = plant;
    for (const auto& row : controller.row_data()) out.append_row(row);
    return out;
}

DegreeValue strength_value(DegreeValue delta_plant, DegreeValue delta_controlled) {
    if (delta_plant.is_infinite() || delta_controlled.is_infinite()) return DegreeValue::infinity();
    return DegreeValue(delta_controlled.value() - delta_plant.value());
}

DegreeValue generic_strength(std::size_t n, std::size_t k, std::size_t plant_rows, std::size_t controller_rows) {
    const long s = static_cast<long>(plant_rows + controller_rows) - static_cast<long>(k) + 1;
    if (s > static_cast<long>(n)) return DegreeValue::infinity();
    if (plant_rows < k) return DegreeValue(static_cast<int>(std::max(s, 0L)));
    return DegreeValue(static_cast<int>(controller_rows));
}

StrengthReport strength(const SystemMatrix& plant, const SystemMatrix& controller) {
    check_compatible(plant, controller);
    StrengthReport r;
    r.n = plant.n();
    r.k = plant.k();
    r.plant_rows = plant.rows();
    r.controller_rows = controller.rows();
    r.delta_plant = degree_of_autonomy(plant);
    r.delta_controlled = degree_of_autonomy(interconnect(plant, controller));
    r.strength = strength_value(r.delta_plant, r.delta_controlled);
    r.generic_bound = r.delta_plant.is_infinite()
                          ? DegreeValue::infinity()
                          : generic_strength(r.n, r.k, r.plant_rows, r.controller_rows);
    r.max_efficient = r.strength == r.generic_bound;
    return r;
}

bool is_max_efficient(const SystemMatrix& plant, const SystemMatrix& controller) {
    return strength(plant, controller).max_efficient;
}

SystemMatrix restrict(const SystemMatrix& m, const SublatticeEmbedding& emb) {
    require_scalar(m);
    if (emb.n() != m.n()) throw DimensionMismatch(m.n(), emb.n());
    LaurentIdeal restricted = restrict_ideal(characteristic_ideal(m), emb.indices());
    SystemMatrix out(emb.m(), 1);
    for (const LaurentPoly& g : restricted.saturated_basis().gens) out.append_row({g});
    return out;
}

DegreeValue degree_by_restriction_oracle(const SystemMatrix& m) {
    require_scalar(m);
    const LaurentIdeal ideal = characteristic_ideal(m);
    if (ideal.is_unit()) return DegreeValue::infinity();
    const std::size_t n = m.n();
    // Subsets by decreasing size; the empty sublattice always qualifies for a
    // proper ideal since I ∩ Q = 0.
    for (std::size_t size = n + 1; size-- > 0;) {
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::uint32_t{1} << i)) keep.push_back(i);
            if (restrict_ideal(ideal, keep).is_zero()) return DegreeValue(static_cast<int>(n - size));
        }
    }
    throw std::logic_error("restriction to the zero sublattice of a proper ideal must be non-autonomous");
}

}  // namespace autonomy
