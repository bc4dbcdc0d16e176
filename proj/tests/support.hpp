#pragma once

// Shared helpers for the test binaries: seeded generators and brute-force
// oracles that do not go through the Groebner engine.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "autonomy/behavior.hpp"
#include "autonomy/groebner.hpp"
#include "autonomy/io.hpp"
#include "autonomy/laurent.hpp"

namespace support {

using namespace autonomy;
using Dense = std::map<std::vector<int>, Rational>;

inline LaurentPoly P(const std::string& text, std::size_t n) { return parse_poly(text, n); }

inline ExponentVector ev(std::vector<int> e) { return ExponentVector(std::span<const int>(e)); }

// Up to `max_terms` terms with exponents in [lo, hi] and small coefficients.
inline LaurentPoly random_poly(std::mt19937_64& rng, std::size_t n, int lo, int hi, int max_terms,
                               bool allow_zero = false) {
    std::uniform_int_distribution<int> exp(lo, hi), coeff(-6, 6), count(allow_zero ? 0 : 1, max_terms);
    while (true) {
        std::vector<Term> terms;
        const int t = count(rng);
        for (int i = 0; i < t; ++i) {
            ExponentVector e(n);
            for (std::size_t j = 0; j < n; ++j) e[j] = exp(rng);
            int c = coeff(rng);
            if (c == 0) c = 7;
            Rational q(c);
            if (rng() % 4 == 0) q /= Rational(static_cast<long>(rng() % 5 + 2));
            terms.push_back({q, e});
        }
        LaurentPoly p = LaurentPoly::from_terms(n, std::move(terms));
        if (allow_zero || !p.is_zero()) return p;
    }
}

inline Dense dense(const LaurentPoly& p) {
    Dense d;
    for (const Term& t : p.terms()) d[std::vector<int>(t.monomial.begin(), t.monomial.end())] += t.coeff;
    return d;
}

inline LaurentPoly from_dense(std::size_t n, const Dense& d) {
    std::vector<Term> terms;
    for (const auto& [e, c] : d)
        if (c != 0) terms.push_back({c, ev(e)});
    return LaurentPoly::from_terms(n, std::move(terms));
}

// Schoolbook product over a plain map.
inline LaurentPoly convolve(const LaurentPoly& p, const LaurentPoly& q) {
    Dense out;
    for (const auto& [a, ca] : dense(p)) {
        for (const auto& [b, cb] : dense(q)) {
            std::vector<int> e(a.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
            out[e] += ca * cb;
        }
    }
    return from_dense(p.dim(), out);
}

// Every vector in Z^n with sum |e_i| <= d, by scanning the box [-d, d]^n.
inline std::vector<std::vector<int>> box_enumeration(std::size_t n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(n, -d);
    while (true) {
        int s = 0;
        for (int x : e) s += std::abs(x);
        if (s <= d) out.push_back(e);
        std::size_t i = 0;
        while (i < n && e[i] == d) e[i++] = -d;
        if (i == n) break;
        ++e[i];
    }
    return out;
}

// Rank-revealing elimination over Q: is `target` in the Q-span of `vectors`?
inline bool in_span(const std::vector<Dense>& vectors, const Dense& target) {
    std::map<std::vector<int>, std::size_t> column;
    auto col = [&](const std::vector<int>& e) {
        auto [it, inserted] = column.try_emplace(e, column.size());
        return it->second;
    };
    auto to_row = [&](const Dense& d) {
        std::map<std::size_t, Rational> row;
        for (const auto& [e, c] : d)
            if (c != 0) row[col(e)] = c;
        return row;
    };
    // Echelon rows keyed by pivot column.
    std::map<std::size_t, std::map<std::size_t, Rational>> pivots;
    auto reduce = [&](std::map<std::size_t, Rational> row) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto piv = pivots.find(lead->first);
            if (piv == pivots.end()) break;
            const Rational factor = lead->second / piv->second.begin()->second;
            for (const auto& [c, v] : piv->second) {
                Rational& x = row[c];
                x -= factor * v;
                if (x == 0) row.erase(c);
            }
        }
        return row;
    };
    for (const Dense& v : vectors) {
        auto row = reduce(to_row(v));
        if (!row.empty()) pivots[row.begin()->first] = std::move(row);
    }
    return reduce(to_row(target)).empty();
}

// Macaulay-matrix membership in A+: is f = sum c_i g_i with every cofactor
// monomial of total degree <= cofactor_degree?
inline bool in_ideal_bounded(const LaurentPoly& f, const std::vector<LaurentPoly>& gens, int cofactor_degree) {
    const std::size_t n = f.dim();
    std::vector<Dense> spanning;
    for (const std::vector<int>& e : box_enumeration(n, cofactor_degree)) {
        if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) continue;
        const LaurentPoly m = LaurentPoly::monomial(1, ev(e));
        for (const LaurentPoly& g : gens) spanning.push_back(dense(m * g));
    }
    return in_span(spanning, dense(f));
}

inline SystemMatrix system(std::size_t n, std::size_t k, const std::vector<std::vector<std::string>>& rows) {
    SystemMatrix m(n, k);
    for (const auto& r : rows) {
        SystemMatrix::Row row;
        for (const std::string& e : r) row.push_back(P(e, n));
        m.append_row(std::move(row));
    }
    return m;
}

// Reduced-basis checks shared by the suites: Buchberger criterion, reducedness
// and idempotent normal forms.
inline bool well_formed(const GroebnerBasis& gb) {
    if (!satisfies_buchberger_criterion(gb) || !is_reduced(gb)) return false;
    for (const LaurentPoly& g : gb.gens) {
        const LaurentPoly r = normal_form(g + LaurentPoly::constant(gb.dim, 1), gb);
        if (normal_form(r, gb) != r) return false;
    }
    return true;
}

}  // namespace support
