// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "autonomy/control.hpp"
#include "autonomy/genericity.hpp"
#include "autonomy/laurent_ideal.hpp"
#include "support.hpp"

using namespace autonomy;
using support::system;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::string fraction_text(const ExperimentStats& s) {
    return fmt("%zu/%zu", s.generic_count(), s.trials);
}

SampleSpec make_spec(std::size_t n, std::size_t k, std::size_t rows, std::size_t d, std::uint64_t seed = 42) {
    SampleSpec s;
    s.n = n;
    s.k = k;
    s.rows = rows;
    s.degree_bound = d;
    s.seed = seed;
    return s;
}

// Trial i of an experiment, rebuilt from the same counter-based seed.
SystemMatrix regenerate(const SampleSpec& spec, std::uint64_t stream, std::size_t i) {
    Rng rng(trial_seed(spec.seed, stream, i));
    return sample_matrix(spec, rng);
}

// Every saturated basis produced by the criteria, with the generators it came from.
struct Computed {
    std::size_t dim;
    std::vector<LaurentPoly> gens;
    GroebnerBasis basis;
};
std::vector<Computed> computed;

LaurentIdeal record(const LaurentIdeal& I) {
    computed.push_back({I.dim(), I.raw_gens(), I.saturated_basis()});
    return I;
}

LaurentIdeal record(const SystemMatrix& m) { return record(characteristic_ideal(m)); }

// 1. Worked examples.
void criterion_worked() {
    bool ok = true;
    double slowest = 0;
    auto timed = [&](const SystemMatrix& m) {
        const auto t0 = Clock::now();
        AutonomyReport r = analyze(m);
        slowest = std::max(slowest, seconds_since(t0));
        record(m);
        return r;
    };
    AutonomyReport point = timed(system(2, 1, {{"s1 - 1"}, {"s2 - 1"}}));
    ok = ok && point.degree == DegreeValue(2) && point.strongly_autonomous;
    AutonomyReport line = timed(system(2, 1, {{"s1 - 1"}}));
    ok = ok && line.degree == DegreeValue(1) && !line.strongly_autonomous;
    ok = ok && slowest < 1.0;
    report(1, ok, fmt("(s1-1; s2-1) -> %s strongly=%d, (s1-1) -> %s, slowest %.4f s",
                      point.degree.to_string().c_str(), point.strongly_autonomous, line.degree.to_string().c_str(),
                      slowest));
}

// 2. Scalar 2-D genericity.
void criterion_scalar() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (std::size_t rows = 1; rows <= 3; ++rows) {
        SampleSpec spec = make_spec(2, 1, rows, 2);
        ExperimentStats s = expt_generic_degree(spec, 100);
        ok = ok && s.fraction_generic() >= Rational(9, 10);
        detail += fmt("l=%zu -> %s %s; ", rows, s.predicted.to_string().c_str(), fraction_text(s).c_str());
        for (std::size_t i = 0; i < s.trials; ++i) record(regenerate(spec, 0, i));
    }
    const double elapsed = seconds_since(t0);
    ok = ok && elapsed <= 300;
    report(2, ok, detail + fmt("%.2f s", elapsed));
}

// 3. Matrix case with the Macaulay ceiling.
void criterion_matrix() {
    SampleSpec spec = make_spec(3, 2, 3, 1);
    ExperimentStats s = expt_generic_degree(spec, 100);
    std::size_t over = 0;
    for (const auto& [d, count] : s.histogram)
        if (d.is_finite() && d.value() > 2) over += count;
    const bool ok = s.fraction_generic() >= Rational(9, 10) && s.violations == 0 && over == 0;
    for (std::size_t i = 0; i < s.trials; ++i) record(regenerate(spec, 0, i));
    report(3, ok, fmt("degree 2 on %s, Macaulay violations %zu, %.2f s", fraction_text(s).c_str(),
                      s.violations + over, s.wall_time.count()));
}

// 4. Codimension against the brute-force restriction oracle.
void criterion_oracle() {
    std::size_t agree = 0;
    const std::size_t total = 50;
    for (std::size_t i = 0; i < total; ++i) {
        SampleSpec spec = make_spec(2, 1, 1 + i % 2, 1 + (i / 2) % 2, 4242);
        if (i % 3 == 2) spec.density = 0.5;  // sparse draws reach non-generic degrees
        Rng rng(trial_seed(spec.seed, 4, i));
        SystemMatrix m = sample_matrix(spec, rng);
        record(m);
        if (degree_by_restriction_oracle(m) == degree_of_autonomy(m)) ++agree;
    }
    report(4, agree == total, fmt("%zu/%zu agree", agree, total));
}

// 5. Presentation independence of the characteristic ideal.
void criterion_presentation() {
    std::size_t same = 0;
    const std::size_t total = 25;
    for (std::size_t i = 0; i < total; ++i) {
        const std::size_t k = 1 + i % 2;
        SampleSpec spec = make_spec(2, k, k + (i / 2) % 2, 1 + i % 3 / 2, 555);
        Rng rng(trial_seed(spec.seed, 5, i));
        SystemMatrix m = sample_matrix(spec, rng);
        std::vector<SystemMatrix::Row> rows = m.row_data();
        std::shuffle(rows.begin(), rows.end(), rng);
        std::uniform_int_distribution<int> expo(-3, 3), coeff(1, 4);
        LaurentPoly unit = LaurentPoly::monomial(Rational(coeff(rng) * (i % 2 ? -1 : 1)),
                                                 support::ev({expo(rng), expo(rng)}));
        for (LaurentPoly& e : rows[i % rows.size()]) e *= unit;
        SystemMatrix::Row combo(k, LaurentPoly(2));
        for (const auto& row : rows) {
            const LaurentPoly c = support::random_poly(rng, 2, -2, 2, 3);
            for (std::size_t j = 0; j < k; ++j) combo[j] += c * row[j];
        }
        rows.push_back(std::move(combo));
        const LaurentIdeal before = record(m);
        const LaurentIdeal after = record(SystemMatrix(2, k, rows));
        if (before.saturated_basis() == after.saturated_basis()) ++same;
    }
    report(5, same == total, fmt("%zu/%zu identical saturated bases", same, total));
}

// 6. Regular sequences and the unit ideal.
void criterion_regular() {
    SampleSpec spec = make_spec(2, 1, 2, 2);
    ExperimentStats reg = expt_regular_sequences(spec, 100);
    SampleSpec unit_spec = make_spec(2, 1, 3, 2);
    ExperimentStats unit = expt_unit_ideal(unit_spec, 100);
    for (const SampleSpec& s : {spec, unit_spec})
        for (std::size_t i = 0; i < 100; ++i) {
            SystemMatrix m = regenerate(s, 0, i);
            std::vector<LaurentPoly> polys;
            for (const auto& row : m.row_data()) polys.push_back(row[0]);
            record(LaurentIdeal::from_gens(2, polys));
        }
    const bool ok = reg.fraction_generic() >= Rational(9, 10) && reg.violations == 0 &&
                    unit.fraction_generic() >= Rational(9, 10);
    report(6, ok, fmt("regular %s with height violations %zu; unit ideal %s", fraction_text(reg).c_str(),
                      reg.violations, fraction_text(unit).c_str()));
}

// 7. Controller strength.
void criterion_strength() {
    struct Case {
        std::size_t k, l, lc;
    };
    bool ok = true;
    std::string detail;
    for (const Case& c : {Case{2, 1, 2}, Case{1, 1, 1}, Case{1, 2, 2}}) {
        SampleSpec plant = make_spec(2, c.k, c.l, 1, 42);
        SampleSpec controller = make_spec(2, c.k, c.lc, 1, 43);
        ExperimentStats s = expt_controller_strength(plant, controller, 50);
        ok = ok && s.fraction_generic() >= Rational(9, 10) && s.violations == 0;
        detail += fmt("(k=%zu,l=%zu,l'=%zu) -> %s %s; ", c.k, c.l, c.lc, s.predicted.to_string().c_str(),
                      fraction_text(s).c_str());
        for (std::size_t i = 0; i < 50; ++i) {
            SystemMatrix p = regenerate(plant, 0, i);
            record(p);
            record(interconnect(p, regenerate(controller, 1, i)));
        }
    }
    report(7, ok, detail.substr(0, detail.size() - 2));
}

// 8. Monomial counts against enumeration of the box [-d, d]^n.
void criterion_count() {
    bool ok = true;
    for (std::size_t n = 1; n <= 3; ++n)
        for (int d = 0; d <= 6; ++d) {
            std::size_t brute = 0;
            for (const auto& e : support::box_enumeration(n, d)) {
                int l1 = 0;
                for (int x : e) l1 += std::abs(x);
                brute += l1 <= d;
            }
            ok = ok && count_monomials(n, d) == brute && monomials_up_to(n, d).size() == brute;
        }
    report(8, ok, fmt("n<=3, d<=6; count_monomials(3,6)=%zu", count_monomials(3, 6)));
}

// 9. Groebner engine properties over every basis recorded above.
void criterion_groebner() {
    std::size_t criterion = 0, idempotent = 0, unique = 0;
    Rng rng(99);
    for (const Computed& c : computed) {
        const GroebnerBasis& gb = c.basis;
        if (!satisfies_buchberger_criterion(gb) || !is_reduced(gb)) ++criterion;
        for (int t = 0; t < 3; ++t) {
            LaurentPoly p = support::random_poly(rng, c.dim, -3, 3, 4);
            for (const LaurentPoly& g : gb.gens) p += g * support::random_poly(rng, c.dim, -1, 1, 1, false);
            p = p.is_zero() ? p : normalize(p).poly_part;
            const LaurentPoly r = normal_form(p, gb);
            if (normal_form(r, gb) != r) ++idempotent;
        }
        // Permute and rescale (by constants and unit monomials) both the
        // original generators and the basis itself.
        std::vector<LaurentPoly> gens = c.gens;
        std::shuffle(gens.begin(), gens.end(), rng);
        std::uniform_int_distribution<int> coeff(-7, 7), expo(-2, 2);
        for (LaurentPoly& g : gens) {
            int a = 0;
            while (a == 0) a = coeff(rng);
            std::vector<int> e(c.dim);
            for (int& x : e) x = expo(rng);
            g *= LaurentPoly::monomial(Rational(a, 3), support::ev(e));
        }
        if (LaurentIdeal::from_gens(c.dim, gens).saturated_basis() != gb) ++unique;
        std::vector<LaurentPoly> basis = gb.gens;
        std::shuffle(basis.begin(), basis.end(), rng);
        for (LaurentPoly& g : basis) {
            const int a = coeff(rng);
            g *= Rational(a == 0 ? 5 : a, 2);
        }
        if (buchberger(c.dim, basis, gb.order) != gb) ++unique;
    }
    report(9, criterion + idempotent + unique == 0,
           fmt("%zu bases; criterion/reducedness violations %zu, normal-form %zu, uniqueness %zu", computed.size(),
               criterion, idempotent, unique));
}

// 10. Parse -> format -> parse over the system corpus.
void criterion_round_trip() {
    std::size_t files = 0, fixed = 0;
    bool negative = false, rational = false;
    for (const auto& entry : std::filesystem::directory_iterator(AUTONOMY_TEST_DATA)) {
        if (entry.path().extension() != ".sys") continue;
        ++files;
        std::ifstream in(entry.path());
        std::stringstream text;
        text << in.rdbuf();
        try {
            SystemMatrix m = parse_system(text.str());
            const std::string once = format_system(m);
            SystemMatrix again = parse_system(once);
            if (again == m && format_system(again) == once) ++fixed;
            negative = negative || once.find("^-") != std::string::npos;
            rational = rational || once.find('/') != std::string::npos;
        } catch (const std::exception& e) {
            std::fprintf(stderr, "%s: %s\n", entry.path().c_str(), e.what());
        }
    }
    report(10, files >= 20 && fixed == files && negative && rational,
           fmt("%zu/%zu files fixed points (negative exponents %d, rationals %d)", fixed, files, negative, rational));
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    criterion_worked();
    criterion_scalar();
    criterion_matrix();
    criterion_oracle();
    criterion_presentation();
    criterion_regular();
    criterion_strength();
    criterion_count();
    criterion_groebner();
    criterion_round_trip();
    std::printf("%d failed, %.1f s total\n", failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
