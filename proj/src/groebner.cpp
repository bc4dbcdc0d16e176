#include "autonomy/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>

#include "autonomy/errors.hpp"

namespace autonomy {

// ---------------------------------------------------------------------------
// Monomial orders

MonomialOrder MonomialOrder::grevlex() { return {Kind::GradedReverseLex, 0, nullptr}; }

MonomialOrder MonomialOrder::lex() { return {Kind::Lex, 0, nullptr}; }

MonomialOrder MonomialOrder::block(std::span<const std::size_t> elim_block,
                                   const MonomialOrder& inner) {
    std::uint32_t mask = 0;
    for (std::size_t i : elim_block) {
        if (i >= kMaxVariables) throw PreconditionError("block variable index out of range");
        mask |= std::uint32_t{1} << i;
    }
    return {Kind::Block, mask, std::make_shared<const MonomialOrder>(inner)};
}

std::vector<std::size_t> MonomialOrder::elim_block() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (elim_mask_ & (std::uint32_t{1} << i)) out.push_back(i);
    return out;
}

namespace {

std::strong_ordering grevlex_masked(const ExponentVector& a, const ExponentVector& b,
                                     std::uint32_t mask) noexcept {
    const std::size_t n = a.size();
    int da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::uint32_t{1} << i)) {
            da += a[i];
            db += b[i];
        }
    }
    if (da != db) return da <=> db;
    for (std::size_t i = n; i-- > 0;) {
        if (!(mask & (std::uint32_t{1} << i))) continue;
        if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const ExponentVector& a,
                                            const ExponentVector& b) const noexcept {
    switch (kind_) {
        case Kind::GradedReverseLex:
            return grevlex_masked(a, b, ~std::uint32_t{0});
        case Kind::Lex:
            return a <=> b;
        case Kind::Block:
            if (auto c = grevlex_masked(a, b, elim_mask_); c != 0) return c;
            return inner_->compare(a, b);
    }
    return std::strong_ordering::equal;
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    if (a.kind_ != b.kind_ || a.elim_mask_ != b.elim_mask_) return false;
    if (a.kind_ != MonomialOrder::Kind::Block) return true;
    return *a.inner_ == *b.inner_;
}

// ---------------------------------------------------------------------------
// Internal fraction-free polynomial representation

namespace {

bool divides(const ExponentVector& a, const ExponentVector& b) noexcept {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool coprime(const ExponentVector& a, const ExponentVector& b) noexcept {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

std::uint32_t support_mask(const ExponentVector& e) noexcept {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) m |= std::uint32_t{1} << i;
    return m;
}

// Integer coefficients, terms descending in the active order.
struct Poly {
    std::vector<ExponentVector> mons;
    std::vector<Integer> coeffs;

    bool empty() const noexcept { return mons.empty(); }
    std::size_t size() const noexcept { return mons.size(); }
    const ExponentVector& lm() const { return mons.front(); }
    const Integer& lc() const { return coeffs.front(); }
};

Integer content(const Poly& p) {
    Integer g = 0;
    for (const Integer& c : p.coeffs) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Divides by the content and makes the leading coefficient positive.
// Returns the factor divided out (signed).
Integer make_primitive(Poly& p) {
    if (p.empty()) return 1;
    Integer g = content(p);
    if (p.lc() < 0) g = -g;
    if (g != 1)
        for (Integer& c : p.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return g;
}

void sort_terms(Poly& p, const MonomialOrder& order) {
    std::vector<std::size_t> idx(p.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return order.greater(p.mons[a], p.mons[b]); });
    Poly q;
    q.mons.reserve(p.size());
    q.coeffs.reserve(p.size());
    for (std::size_t i : idx) {
        q.mons.push_back(p.mons[i]);
        q.coeffs.push_back(std::move(p.coeffs[i]));
    }
    p = std::move(q);
}

// Converts to an integer polynomial; `scale` receives the factor with
// result = scale * p.
Poly to_poly(const LaurentPoly& p, const MonomialOrder& order, Rational* scale = nullptr) {
    Integer den = 1;
    for (const Term& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    Poly q;
    q.mons.reserve(p.size());
    q.coeffs.reserve(p.size());
    for (const Term& t : p.terms()) {
        if (!t.monomial.is_nonnegative())
            throw PreconditionError("Groebner input must lie in A+ (no negative exponents)");
        q.mons.push_back(t.monomial);
        q.coeffs.push_back(t.coeff.get_num() * (den / t.coeff.get_den()));
    }
    sort_terms(q, order);
    Integer g = make_primitive(q);
    if (scale) *scale = Rational(den) / Rational(g);
    return q;
}

LaurentPoly to_laurent(std::size_t dim, const Poly& p, const Rational& divisor = 1) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) terms.push_back({Rational(p.coeffs[i]) / divisor, p.mons[i]});
    return LaurentPoly::from_terms(dim, std::move(terms));
}

LaurentPoly to_monic_laurent(std::size_t dim, const Poly& p) {
    return to_laurent(dim, p, Rational(p.lc()));
}

class StepCounter {
public:
    explicit StepCounter(std::optional<std::size_t> limit) : limit_(limit) {}
    void tick() {
        ++steps_;
        if (limit_ && steps_ > *limit_) throw StepLimitExceeded(*limit_);
    }

private:
    std::optional<std::size_t> limit_;
    std::size_t steps_ = 0;
};

// a * p[from_p..] - c * x^shift * g[from_g..], merged in `order`.
Poly combine(const Poly& p, std::size_t from_p, const Integer& a, const Poly& g, std::size_t from_g,
             const ExponentVector& shift, const Integer& c, const MonomialOrder& order) {
    Poly out;
    out.mons.reserve(p.size() - from_p + g.size() - from_g);
    out.coeffs.reserve(out.mons.capacity());
    std::size_t i = from_p, j = from_g;
    ExponentVector gm;
    bool gm_valid = false;
    while (i < p.size() || j < g.size()) {
        if (j < g.size() && !gm_valid) {
            gm = g.mons[j] + shift;
            gm_valid = true;
        }
        std::strong_ordering cmp = std::strong_ordering::greater;
        if (i >= p.size())
            cmp = std::strong_ordering::less;
        else if (j < g.size())
            cmp = order.compare(p.mons[i], gm);
        if (cmp > 0) {
            out.mons.push_back(p.mons[i]);
            out.coeffs.push_back(a * p.coeffs[i]);
            ++i;
        } else if (cmp < 0) {
            out.mons.push_back(gm);
            out.coeffs.push_back(-c * g.coeffs[j]);
            ++j;
            gm_valid = false;
        } else {
            Integer v = a * p.coeffs[i] - c * g.coeffs[j];
            if (v != 0) {
                out.mons.push_back(p.mons[i]);
                out.coeffs.push_back(std::move(v));
            }
            ++i;
            ++j;
            gm_valid = false;
        }
    }
    return out;
}

struct Reducer {
    const Poly* poly;
    std::uint32_t mask;
    int degree;
};

class Engine {
public:
    Engine(const MonomialOrder& order, std::optional<std::size_t> limit)
        : order_(order), steps_(limit) {}

    const MonomialOrder& order() const noexcept { return order_; }

    // Full reduction of p against `reducers`. On return the result is
    // primitive and `*scale` (when given) is multiplied by the factor f with
    // result = f * (normal form of the input).
    Poly reduce(Poly p, std::span<const Reducer> reducers, Rational* scale = nullptr) {
        Poly rem;
        std::size_t pos = 0;  // p[0..pos) already moved to rem
        std::size_t since_content = 0;
        while (pos < p.size()) {
            const ExponentVector& m = p.mons[pos];
            const Poly* g = find_reducer(m, reducers);
            if (!g) {
                rem.mons.push_back(m);
                rem.coeffs.push_back(std::move(p.coeffs[pos]));
                ++pos;
                continue;
            }
            steps_.tick();
            Integer h = gcd(g->lc(), p.coeffs[pos]);
            Integer a = g->lc() / h;
            Integer c = p.coeffs[pos] / h;
            p = combine(p, pos + 1, a, *g, 1, m - g->lm(), c, order_);
            pos = 0;
            if (a != 1) {
                for (Integer& r : rem.coeffs) r *= a;
                if (scale) *scale *= Rational(a);
            }
            if (++since_content >= 8) {
                since_content = 0;
                strip_common_content(p, rem, scale);
            }
        }
        Integer f = make_primitive(rem);
        if (scale && !rem.mons.empty()) *scale /= Rational(f);
        return rem;
    }

private:
    const Poly* find_reducer(const ExponentVector& m, std::span<const Reducer> reducers) const {
        const std::uint32_t mm = support_mask(m);
        const int md = m.total_degree();
        for (const Reducer& r : reducers) {
            if (r.degree > md || (r.mask & ~mm) != 0) continue;
            if (divides(r.poly->lm(), m)) return r.poly;
        }
        return nullptr;
    }

    static void strip_common_content(Poly& p, Poly& rem, Rational* scale) {
        Integer g = content(p);
        if (g == 1 || g == 0) return;
        for (const Integer& c : rem.coeffs) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) return;
        }
        for (Integer& c : p.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        for (Integer& c : rem.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        if (scale) *scale /= Rational(g);
    }

    const MonomialOrder& order_;
    StepCounter steps_;
};

Reducer make_reducer(const Poly& p) {
    return {&p, support_mask(p.lm()), p.lm().total_degree()};
}

Poly spoly(const Poly& f, const Poly& g, const MonomialOrder& order) {
    ExponentVector l = ExponentVector::max(f.lm(), g.lm());
    Integer h = gcd(f.lc(), g.lc());
    Integer a = g.lc() / h;
    Integer c = f.lc() / h;
    // a * (l/lm f) * f - c * (l/lm g) * g, leading terms cancel.
    Poly ff;
    ExponentVector sf = l - f.lm();
    ff.mons.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        ff.mons.push_back(f.mons[i] + sf);
        ff.coeffs.push_back(f.coeffs[i]);
    }
    return combine(ff, 1, a, g, 1, l - g.lm(), c, order);
}

struct Pair {
    std::size_t i, j;
    ExponentVector lcm;
    int degree;
};

// Buchberger's algorithm with the Gebauer-Moeller installation of the
// product and chain criteria, normal selection strategy. Returns the reduced
// basis (primitive integer polynomials, ascending leading monomials).
std::vector<Poly> groebner_core(std::vector<Poly> input, const MonomialOrder& order) {
    Engine engine(order, step_limit_from_env());
    std::vector<Poly> basis;
    basis.reserve(64);
    std::vector<std::size_t> active;
    std::vector<Pair> pairs;

    auto reducers = [&] {
        std::vector<Reducer> rs;
        rs.reserve(active.size());
        for (std::size_t k : active) rs.push_back(make_reducer(basis[k]));
        return rs;
    };

    auto update = [&](Poly h) {
        // `basis` may reallocate: work with indices only.
        const std::size_t hi = basis.size();
        basis.push_back(std::move(h));
        const ExponentVector hlm = basis[hi].lm();

        std::vector<Pair> candidates;
        for (std::size_t g : active) {
            ExponentVector l = ExponentVector::max(basis[g].lm(), hlm);
            candidates.push_back({g, hi, l, l.total_degree()});
        }
        std::vector<Pair> kept;
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            const Pair& p = candidates[a];
            if (coprime(basis[p.i].lm(), hlm)) {
                kept.push_back(p);
                continue;
            }
            bool redundant = false;
            for (std::size_t b = a + 1; b < candidates.size() && !redundant; ++b)
                redundant = divides(candidates[b].lcm, p.lcm);
            for (std::size_t b = 0; b < kept.size() && !redundant; ++b)
                redundant = divides(kept[b].lcm, p.lcm);
            if (!redundant) kept.push_back(p);
        }
        std::erase_if(kept, [&](const Pair& p) { return coprime(basis[p.i].lm(), hlm); });

        std::erase_if(pairs, [&](const Pair& p) {
            if (!divides(hlm, p.lcm)) return false;
            ExponentVector li = ExponentVector::max(basis[p.i].lm(), hlm);
            ExponentVector lj = ExponentVector::max(basis[p.j].lm(), hlm);
            return li != p.lcm && lj != p.lcm;
        });
        pairs.insert(pairs.end(), kept.begin(), kept.end());

        std::erase_if(active, [&](std::size_t g) { return divides(hlm, basis[g].lm()); });
        active.push_back(hi);
    };

    std::sort(input.begin(), input.end(),
              [&](const Poly& a, const Poly& b) { return order.compare(a.lm(), b.lm()) < 0; });
    for (Poly& f : input) {
        if (f.empty()) continue;
        auto rs = reducers();
        Poly r = engine.reduce(std::move(f), rs);
        if (!r.empty()) update(std::move(r));
    }

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            if (a.degree != b.degree) return a.degree < b.degree;
            if (auto c = order.compare(a.lcm, b.lcm); c != 0) return c < 0;
            return std::pair(a.j, a.i) < std::pair(b.j, b.i);
        });
        Pair p = *best;
        pairs.erase(best);
        Poly s = spoly(basis[p.i], basis[p.j], order);
        if (s.empty()) continue;
        make_primitive(s);
        auto rs = reducers();
        Poly r = engine.reduce(std::move(s), rs);
        if (!r.empty()) update(std::move(r));
    }

    // `active` is minimal; reduce tails against the other generators.
    std::vector<Poly> result;
    result.reserve(active.size());
    for (std::size_t g : active) result.push_back(basis[g]);
    for (std::size_t a = 0; a < result.size(); ++a) {
        std::vector<Reducer> others;
        for (std::size_t b = 0; b < result.size(); ++b)
            if (b != a) others.push_back(make_reducer(result[b]));
        Poly tail = result[a];
        Poly lead;
        lead.mons.push_back(tail.mons.front());
        lead.coeffs.push_back(tail.coeffs.front());
        tail.mons.erase(tail.mons.begin());
        tail.coeffs.erase(tail.coeffs.begin());
        Rational scale = 1;
        Poly red = engine.reduce(std::move(tail), others, &scale);
        // lead + tail  ~  lead + red / scale  ->  scale * lead + red
        Poly merged = combine(red, 0, 1, lead, 0, ExponentVector(lead.lm().size()), -1, order);
        // merged = red + lead; now rescale so the lead coefficient matches.
        Rational lc = Rational(result[a].lc()) * scale;
        Integer num = lc.get_num(), den = lc.get_den();
        for (std::size_t t = 0; t < merged.size(); ++t) {
            if (merged.mons[t] == lead.lm())
                merged.coeffs[t] = num;
            else
                merged.coeffs[t] *= den;
        }
        make_primitive(merged);
        result[a] = std::move(merged);
    }
    std::sort(result.begin(), result.end(),
              [&](const Poly& a, const Poly& b) { return order.compare(a.lm(), b.lm()) < 0; });
    return result;
}

std::vector<Poly> to_polys(std::span<const LaurentPoly> gens, const MonomialOrder& order) {
    std::vector<Poly> out;
    out.reserve(gens.size());
    for (const LaurentPoly& g : gens)
        if (!g.is_zero()) out.push_back(to_poly(g, order));
    return out;
}

void check_gens_dim(std::size_t dim, std::span<const LaurentPoly> gens) {
    for (const LaurentPoly& g : gens)
        if (g.dim() != dim) throw DimensionMismatch(dim, g.dim());
}

GroebnerBasis make_basis(std::size_t dim, const MonomialOrder& order, const std::vector<Poly>& polys) {
    GroebnerBasis gb{dim, order, {}};
    gb.gens.reserve(polys.size());
    for (const Poly& p : polys) gb.gens.push_back(to_monic_laurent(dim, p));
    return gb;
}

ExponentVector resize(const ExponentVector& e, std::size_t dim) {
    ExponentVector r(dim);
    for (std::size_t i = 0; i < std::min(dim, e.size()); ++i) r[i] = e[i];
    return r;
}

LaurentPoly change_dim(const LaurentPoly& p, std::size_t dim) {
    std::vector<Term> terms;
    for (const Term& t : p.terms()) terms.push_back({t.coeff, resize(t.monomial, dim)});
    return LaurentPoly::from_terms(dim, std::move(terms));
}

// Runs Groebner in `order` on `gens` (already in `dim` variables), keeps the
// basis elements free of `drop_mask` variables and re-expresses them in
// grevlex on the first `out_dim` variables.
GroebnerBasis eliminate_core(std::size_t out_dim, std::vector<Poly> gens, const MonomialOrder& order,
                             std::uint32_t drop_mask) {
    std::vector<Poly> gb = groebner_core(std::move(gens), order);
    const MonomialOrder grevlex = MonomialOrder::grevlex();
    std::vector<Poly> kept;
    for (Poly& p : gb) {
        bool free = std::all_of(p.mons.begin(), p.mons.end(),
                                [&](const ExponentVector& m) { return (support_mask(m) & drop_mask) == 0; });
        if (!free) continue;
        for (ExponentVector& m : p.mons) m = resize(m, out_dim);
        sort_terms(p, grevlex);
        kept.push_back(std::move(p));
    }
    std::sort(kept.begin(), kept.end(),
              [&](const Poly& a, const Poly& b) { return grevlex.compare(a.lm(), b.lm()) < 0; });
    return make_basis(out_dim, grevlex, kept);
}

// x^a -> x^a h^(deg - |a|), h the new last variable.
Poly homogenize(const Poly& p) {
    const std::size_t n = p.lm().size();
    int deg = 0;
    for (const ExponentVector& m : p.mons) deg = std::max(deg, m.total_degree());
    Poly out;
    out.coeffs = p.coeffs;
    for (const ExponentVector& m : p.mons) {
        ExponentVector e = resize(m, n + 1);
        e[n] = deg - m.total_degree();
        out.mons.push_back(e);
    }
    return out;
}

void swap_variables(Poly& p, std::size_t i, std::size_t j) {
    for (ExponentVector& m : p.mons) std::swap(m[i], m[j]);
}

// Bayer: for homogeneous J and a grevlex basis G with x_v the smallest
// variable, {g / x_v^max} generates J : x_v^inf.
std::vector<Poly> saturate_homogeneous(std::vector<Poly> gens, std::size_t v) {
    const MonomialOrder grevlex = MonomialOrder::grevlex();
    const std::size_t last = gens.front().lm().size() - 1;
    for (Poly& g : gens) {
        swap_variables(g, v, last);
        sort_terms(g, grevlex);
    }
    std::vector<Poly> gb = groebner_core(std::move(gens), grevlex);
    for (Poly& g : gb) {
        int lowest = g.mons.front()[last];
        for (const ExponentVector& m : g.mons) lowest = std::min(lowest, m[last]);
        for (ExponentVector& m : g.mons) {
            m[last] -= lowest;
            std::swap(m[v], m[last]);
        }
    }
    return gb;
}

// I : m^inf for a monomial m, I generated by `gens` in A+. Avoids the extra
// elimination variable, which is far more expensive on these inputs.
GroebnerBasis saturate_by_monomial(std::size_t dim, std::vector<Poly> gens, const ExponentVector& m) {
    const MonomialOrder grevlex = MonomialOrder::grevlex();
    std::vector<Poly> hom;
    for (const Poly& g : gens) hom.push_back(homogenize(g));
    for (std::size_t i = 0; i < dim; ++i)
        if (m[i] > 0) hom = saturate_homogeneous(std::move(hom), i);
    std::vector<Poly> affine;
    for (Poly& g : hom) {
        for (ExponentVector& e : g.mons) e = resize(e, dim);
        sort_terms(g, grevlex);
        affine.push_back(std::move(g));
    }
    return make_basis(dim, grevlex, groebner_core(std::move(affine), grevlex));
}

}  // namespace

// ---------------------------------------------------------------------------
// Public API

ExponentVector leading_monomial(const LaurentPoly& p, const MonomialOrder& order) {
    if (p.is_zero()) throw PreconditionError("zero polynomial has no leading monomial");
    const Term* best = &p.terms().front();
    for (const Term& t : p.terms())
        if (order.greater(t.monomial, best->monomial)) best = &t;
    return best->monomial;
}

Rational leading_coefficient(const LaurentPoly& p, const MonomialOrder& order) {
    return p.coefficient(leading_monomial(p, order));
}

std::optional<std::size_t> step_limit_from_env() {
    const char* raw = std::getenv("AUTONOMY_GB_STEP_LIMIT");
    if (!raw || !*raw) return std::nullopt;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || raw[0] == '-')
        throw ValidationError(std::string("AUTONOMY_GB_STEP_LIMIT is not a non-negative integer: ") + raw);
    return static_cast<std::size_t>(v);
}

GroebnerBasis buchberger(std::size_t dim, std::span<const LaurentPoly> gens, const MonomialOrder& order) {
    check_gens_dim(dim, gens);
    std::vector<Poly> polys = to_polys(gens, order);
    GroebnerBasis gb = make_basis(dim, order, groebner_core(std::move(polys), order));
    return gb;
}

LaurentPoly s_polynomial(const LaurentPoly& f, const LaurentPoly& g, const MonomialOrder& order) {
    if (f.dim() != g.dim()) throw DimensionMismatch(f.dim(), g.dim());
    ExponentVector lf = leading_monomial(f, order);
    ExponentVector lg = leading_monomial(g, order);
    ExponentVector l = ExponentVector::max(lf, lg);
    return LaurentPoly::monomial(Rational(1 / f.coefficient(lf)), l - lf) * f -
           LaurentPoly::monomial(Rational(1 / g.coefficient(lg)), l - lg) * g;
}

LaurentPoly normal_form(const LaurentPoly& p, const GroebnerBasis& gb) {
    if (p.dim() != gb.dim) throw DimensionMismatch(gb.dim, p.dim());
    if (p.is_zero() || gb.gens.empty()) return p;
    std::vector<Poly> reducers_storage = to_polys(gb.gens, gb.order);
    std::vector<Reducer> reducers;
    for (const Poly& r : reducers_storage) reducers.push_back(make_reducer(r));
    Rational scale;
    Poly q = to_poly(p, gb.order, &scale);
    Engine engine(gb.order, std::nullopt);
    Poly r = engine.reduce(std::move(q), reducers, &scale);
    return to_laurent(p.dim(), r, scale);
}

bool contains(const GroebnerBasis& gb, const LaurentPoly& p) { return normal_form(p, gb).is_zero(); }

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.gens.size(); ++i)
        for (std::size_t j = i + 1; j < gb.gens.size(); ++j)
            if (!contains(gb, s_polynomial(gb.gens[i], gb.gens[j], gb.order))) return false;
    return true;
}

bool is_reduced(const GroebnerBasis& gb) {
    std::vector<ExponentVector> lms;
    for (const LaurentPoly& g : gb.gens) {
        if (g.is_zero() || leading_coefficient(g, gb.order) != 1) return false;
        lms.push_back(leading_monomial(g, gb.order));
    }
    for (std::size_t i = 0; i < gb.gens.size(); ++i)
        for (std::size_t j = 0; j < gb.gens.size(); ++j) {
            if (i == j) continue;
            for (const Term& t : gb.gens[i].terms())
                if (divides(lms[j], t.monomial)) return false;
        }
    return true;
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& f) {
    if (f.is_zero()) throw PreconditionError("division by zero polynomial");
    if (p.dim() != f.dim()) throw DimensionMismatch(p.dim(), f.dim());
    const MonomialOrder order = MonomialOrder::grevlex();
    const ExponentVector flm = leading_monomial(f, order);
    const Rational flc = f.coefficient(flm);
    LaurentPoly quotient(p.dim());
    LaurentPoly rest = p;
    while (!rest.is_zero()) {
        ExponentVector m = leading_monomial(rest, order);
        ExponentVector q = m - flm;
        if (!q.is_nonnegative()) throw PreconditionError("polynomial division is not exact");
        LaurentPoly t = LaurentPoly::monomial(Rational(rest.coefficient(m) / flc), q);
        quotient += t;
        rest -= t * f;
    }
    return quotient;
}

bool is_unit_ideal(const GroebnerBasis& gb) {
    return gb.gens.size() == 1 && gb.gens.front().is_constant() && !gb.gens.front().is_zero();
}

GroebnerBasis ideal_quotient(const GroebnerBasis& ideal, const LaurentPoly& f) {
    if (f.dim() != ideal.dim) throw DimensionMismatch(ideal.dim, f.dim());
    if (f.is_zero()) throw PreconditionError("ideal quotient by the zero polynomial");
    const std::size_t n = ideal.dim;
    const MonomialOrder grevlex = MonomialOrder::grevlex();
    if (ideal.gens.empty()) return GroebnerBasis{n, grevlex, {}};
    if (is_unit_ideal(ideal) || f.is_constant()) return buchberger(n, ideal.gens, grevlex);

    // I ∩ (f) = (t I + (1 - t) f) ∩ Q[s], t the extra variable n.
    const std::size_t t = n;
    const LaurentPoly tv = LaurentPoly::variable(n + 1, t);
    const LaurentPoly one = LaurentPoly::constant(n + 1, 1);
    std::vector<LaurentPoly> gens;
    for (const LaurentPoly& g : ideal.gens) gens.push_back(tv * change_dim(g, n + 1));
    gens.push_back((one - tv) * change_dim(f, n + 1));
    const std::size_t drop[] = {t};
    const MonomialOrder order = MonomialOrder::block(drop, grevlex);
    GroebnerBasis inter = eliminate_core(n, to_polys(gens, order), order, std::uint32_t{1} << t);

    std::vector<LaurentPoly> quotients;
    for (const LaurentPoly& g : inter.gens) quotients.push_back(divide_exact(g, f));
    return buchberger(n, quotients, grevlex);
}

GroebnerBasis saturate_generators(std::size_t dim, std::span<const LaurentPoly> gens, const LaurentPoly& f) {
    check_gens_dim(dim, gens);
    if (f.dim() != dim) throw DimensionMismatch(dim, f.dim());
    if (f.is_zero()) throw PreconditionError("saturation by the zero polynomial");
    const MonomialOrder grevlex = MonomialOrder::grevlex();
    if (std::all_of(gens.begin(), gens.end(), [](const LaurentPoly& g) { return g.is_zero(); }))
        return GroebnerBasis{dim, grevlex, {}};
    if (f.is_constant()) return buchberger(dim, gens, grevlex);
    if (f.size() == 1 && f.terms().front().monomial.is_nonnegative())
        return saturate_by_monomial(dim, to_polys(gens, grevlex), f.terms().front().monomial);

    const std::size_t t = dim;
    std::vector<LaurentPoly> lifted;
    for (const LaurentPoly& g : gens)
        if (!g.is_zero()) lifted.push_back(change_dim(g, dim + 1));
    lifted.push_back(LaurentPoly::constant(dim + 1, 1) -
                     LaurentPoly::variable(dim + 1, t) * change_dim(f, dim + 1));
    const std::size_t drop[] = {t};
    const MonomialOrder order = MonomialOrder::block(drop, grevlex);
    return eliminate_core(dim, to_polys(lifted, order), order, std::uint32_t{1} << t);
}

GroebnerBasis saturate(const GroebnerBasis& ideal, const LaurentPoly& f) {
    return saturate_generators(ideal.dim, ideal.gens, f);
}

namespace {

// Zero-dimensional case: walk monomials in the kept variables upwards in
// grevlex, reducing each one modulo the ideal, until the first linear
// dependency among normal forms closes off each direction (FGLM).
GroebnerBasis eliminate_zero_dimensional(const GroebnerBasis& ideal, std::uint32_t drop_mask) {
    const std::size_t n = ideal.dim;
    const MonomialOrder& order = ideal.order;
    auto less = [&](const ExponentVector& a, const ExponentVector& b) { return order.compare(a, b) < 0; };
    struct Row {
        LaurentPoly normal;  // echelon vector in the quotient
        LaurentPoly combo;   // the same vector as a combination of monomials
        ExponentVector pivot;
    };
    std::vector<Row> rows;
    std::vector<ExponentVector> leading;
    std::vector<LaurentPoly> out;
    std::set<ExponentVector, decltype(less)> candidates(less);
    candidates.insert(ExponentVector(n));
    while (!candidates.empty()) {
        const ExponentVector m = *candidates.begin();
        candidates.erase(candidates.begin());
        if (std::any_of(leading.begin(), leading.end(), [&](const ExponentVector& l) { return divides(l, m); }))
            continue;
        LaurentPoly combo = LaurentPoly::monomial(Rational(1), m);
        LaurentPoly v = normal_form(combo, ideal);
        while (!v.is_zero()) {
            const ExponentVector lm = leading_monomial(v, order);
            auto it = std::find_if(rows.begin(), rows.end(), [&](const Row& r) { return r.pivot == lm; });
            if (it == rows.end()) break;
            const Rational c = v.coefficient(lm) / it->normal.coefficient(lm);
            v -= c * it->normal;
            combo -= c * it->combo;
        }
        if (v.is_zero()) {
            leading.push_back(m);
            out.push_back(combo * (Rational(1) / leading_coefficient(combo, order)));
            continue;
        }
        const ExponentVector pivot = leading_monomial(v, order);
        rows.push_back({std::move(v), std::move(combo), pivot});
        for (std::size_t i = 0; i < n; ++i) {
            if (drop_mask >> i & 1) continue;
            ExponentVector next = m;
            ++next[i];
            candidates.insert(next);
        }
    }
    std::sort(out.begin(), out.end(), [&](const LaurentPoly& a, const LaurentPoly& b) {
        return less(leading_monomial(a, order), leading_monomial(b, order));
    });
    return GroebnerBasis{n, order, std::move(out)};
}

}  // namespace

GroebnerBasis eliminate(const GroebnerBasis& ideal, std::span<const std::size_t> drop) {
    const std::size_t n = ideal.dim;
    std::uint32_t mask = 0;
    for (std::size_t i : drop) {
        if (i >= n) throw PreconditionError("elimination index out of range");
        mask |= std::uint32_t{1} << i;
    }
    const MonomialOrder grevlex = MonomialOrder::grevlex();
    if (mask == 0) return buchberger(n, ideal.gens, grevlex);
    if (ideal.order == grevlex && !is_unit_ideal(ideal) && !ideal.is_zero_ideal() && dimension(ideal) == 0)
        return eliminate_zero_dimensional(ideal, mask);
    const MonomialOrder order = MonomialOrder::block(drop, grevlex);
    return eliminate_core(n, to_polys(ideal.gens, order), order, mask);
}

int dimension(const GroebnerBasis& gb) {
    if (is_unit_ideal(gb)) throw PreconditionError("dimension of the unit ideal is undefined");
    const std::size_t n = gb.dim;
    std::vector<std::uint32_t> supports;
    for (const LaurentPoly& g : gb.gens) supports.push_back(support_mask(leading_monomial(g, gb.order)));
    int best = 0;
    const std::uint32_t subsets = std::uint32_t{1} << n;
    for (std::uint32_t u = 0; u < subsets; ++u) {
        const int size = std::popcount(u);
        if (size <= best) continue;
        bool independent = std::none_of(supports.begin(), supports.end(),
                                        [u](std::uint32_t s) { return (s & ~u) == 0; });
        if (independent) best = size;
    }
    return best;
}

}  // namespace autonomy
