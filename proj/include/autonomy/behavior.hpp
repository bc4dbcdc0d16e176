#pragma once

// n-D behaviors B(R) = ker R(s, s^-1) presented by an l x k matrix over A.

#include <cstddef>
#include <optional>
#include <vector>

#include "autonomy/degree.hpp"
#include "autonomy/laurent.hpp"
#include "autonomy/laurent_ideal.hpp"

namespace autonomy {

class SystemMatrix {
public:
    using Row = std::vector<LaurentPoly>;

    // Validates that every row has k entries in n variables.
    SystemMatrix(std::size_t n, std::size_t k, std::vector<Row> rows = {});

    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    // Presented row count l (not the minimal number of generators).
    std::size_t rows() const noexcept { return rows_.size(); }
    const std::vector<Row>& row_data() const noexcept { return rows_; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }

    void append_row(Row row);

    friend bool operator==(const SystemMatrix&, const SystemMatrix&) = default;

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<Row> rows_;
};

struct AutonomyReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t rows = 0;
    DegreeValue degree;
    bool autonomous = false;
    bool strongly_autonomous = false;
    bool zero_behavior = false;
    bool under_determined = false;
    // Dimension of the characteristic variety; empty when it is empty
    // (unit characteristic ideal).
    std::optional<int> char_ideal_dim;
    // Saturated reduced Groebner basis of the characteristic ideal.
    std::vector<LaurentPoly> char_ideal_gens;

    friend bool operator==(const AutonomyReport&, const AutonomyReport&) = default;
};

// Determinant by cofactor expansion along the first row.
LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& square);

// All k x k minors, row-index combinations in lexicographic order.
std::vector<LaurentPoly> maximal_minors(const SystemMatrix& m);

LaurentIdeal characteristic_ideal(const SystemMatrix& m);
bool is_autonomous(const SystemMatrix& m);
DegreeValue degree_of_autonomy(const SystemMatrix& m);
// Nonzero behavior whose characteristic variety is finite (degree n).
bool is_strongly_autonomous(const SystemMatrix& m);
AutonomyReport analyze(const SystemMatrix& m);

// Degree of autonomy from an already computed characteristic ideal.
DegreeValue degree_from_ideal(const LaurentIdeal& ideal);

}  // namespace autonomy
