#include "autonomy/behavior.hpp"

#include <string>

#include "autonomy/errors.hpp"

namespace autonomy {

SystemMatrix::SystemMatrix(std::size_t n, std::size_t k, std::vector<Row> rows) : n_(n), k_(k) {
    if (k == 0) throw ValidationError("a system needs at least one column (k >= 1)");
    if (n > kMaxVariables) throw ValidationError("too many variables: " + std::to_string(n));
    for (Row& r : rows) append_row(std::move(r));
}

void SystemMatrix::append_row(Row row) {
    if (row.size() != k_)
        throw ValidationError("row has " + std::to_string(row.size()) + " entries, expected " +
                              std::to_string(k_));
    for (const LaurentPoly& p : row)
        if (p.dim() != n_) throw DimensionMismatch(n_, p.dim());
    rows_.push_back(std::move(row));
}

LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& square) {
    const std::size_t k = square.size();
    if (k == 0) throw PreconditionError("determinant of an empty matrix");
    if (k == 1) return square[0][0];
    const std::size_t dim = square[0][0].dim();
    if (k == 2) return square[0][0] * square[1][1] - square[0][1] * square[1][0];
    LaurentPoly det(dim);
    for (std::size_t j = 0; j < k; ++j) {
        if (square[0][j].is_zero()) continue;
        std::vector<std::vector<LaurentPoly>> sub;
        sub.reserve(k - 1);
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<LaurentPoly> row;
            row.reserve(k - 1);
            for (std::size_t c = 0; c < k; ++c)
                if (c != j) row.push_back(square[i][c]);
            sub.push_back(std::move(row));
        }
        LaurentPoly term = square[0][j] * determinant(sub);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

std::vector<LaurentPoly> maximal_minors(const SystemMatrix& m) {
    const std::size_t l = m.rows(), k = m.k();
    std::vector<LaurentPoly> minors;
    if (l < k) return minors;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        std::vector<std::vector<LaurentPoly>> square;
        square.reserve(k);
        for (std::size_t r : pick) square.push_back(m.row_data()[r]);
        minors.push_back(determinant(square));
        // Next combination in lexicographic order.
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == l - k + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return minors;
}

LaurentIdeal characteristic_ideal(const SystemMatrix& m) {
    std::vector<LaurentPoly> minors = maximal_minors(m);
    return LaurentIdeal::from_gens(m.n(), minors);
}

bool is_autonomous(const SystemMatrix& m) { return !characteristic_ideal(m).is_zero(); }

DegreeValue degree_from_ideal(const LaurentIdeal& ideal) {
    if (ideal.is_unit()) return DegreeValue::infinity();
    if (ideal.is_zero()) return DegreeValue(0);
    return DegreeValue(static_cast<int>(ideal.dim()) - torus_dimension(ideal));
}

DegreeValue degree_of_autonomy(const SystemMatrix& m) { return degree_from_ideal(characteristic_ideal(m)); }

bool is_strongly_autonomous(const SystemMatrix& m) {
    const DegreeValue d = degree_of_autonomy(m);
    return d.is_finite() && d.value() >= 1 && d == DegreeValue(static_cast<int>(m.n()));
}

AutonomyReport analyze(const SystemMatrix& m) {
    LaurentIdeal ideal = characteristic_ideal(m);
    AutonomyReport r;
    r.n = m.n();
    r.k = m.k();
    r.rows = m.rows();
    r.degree = degree_from_ideal(ideal);
    r.zero_behavior = r.degree.is_infinite();
    r.autonomous = r.degree >= DegreeValue(1);
    r.strongly_autonomous = r.autonomous && !r.zero_behavior &&
                            r.degree == DegreeValue(static_cast<int>(m.n()));
    r.under_determined = m.rows() < m.k();
    if (!r.zero_behavior) r.char_ideal_dim = torus_dimension(ideal);
    r.char_ideal_gens = ideal.saturated_basis().gens;
    return r;
}

}  // namespace autonomy
