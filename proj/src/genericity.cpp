#include "autonomy/genericity.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>

#include "autonomy/control.hpp"
#include "autonomy/errors.hpp"
#include "autonomy/laurent_ideal.hpp"

namespace autonomy {

namespace {

struct Outcome {
    DegreeValue key;
    bool violation = false;
};

// Runs fn(0..trials-1) on a pool; results are indexed by trial so the
// aggregate does not depend on scheduling.
std::vector<Outcome> run_trials(std::size_t trials, const RunOptions& opts,
                                const std::function<Outcome(std::size_t)>& fn) {
    std::vector<Outcome> out(trials);
    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(trials, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < trials; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < trials; i = next++) {
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = trials;
                }
            }
        });
    }
    for (std::thread& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

ExperimentStats aggregate(ExperimentKind kind, const SampleSpec& spec, std::size_t trials, DegreeValue predicted,
                          const std::vector<Outcome>& outcomes, std::chrono::steady_clock::time_point start) {
    ExperimentStats stats;
    stats.kind = kind;
    stats.spec = spec;
    stats.trials = trials;
    stats.predicted = predicted;
    for (const Outcome& o : outcomes) {
        ++stats.histogram[o.key];
        if (o.violation) ++stats.violations;
    }
    stats.wall_time = std::chrono::steady_clock::now() - start;
    return stats;
}

std::vector<LaurentPoly> sample_tuple(const SampleSpec& spec, Rng& rng) {
    std::vector<LaurentPoly> out;
    out.reserve(spec.rows);
    for (std::size_t i = 0; i < spec.rows; ++i) out.push_back(sample_poly(spec, rng));
    return out;
}

}  // namespace

void SampleSpec::validate() const {
    if (n == 0 || n > kMaxVariables - 1) throw ValidationError("n must be in 1.." + std::to_string(kMaxVariables - 1));
    if (k == 0) throw ValidationError("k must be positive");
    if (coeff_low > coeff_high) throw ValidationError("coefficient range is empty");
    if (coeff_low == 0 && coeff_high == 0) throw ValidationError("coefficient range contains only zero");
    if (!(density > 0.0 && density <= 1.0)) throw ValidationError("density must lie in (0, 1]");
}

const char* to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::RegularSequences:
            return "regseq";
        case ExperimentKind::UnitIdeal:
            return "unit";
        case ExperimentKind::GenericDegree:
            return "degree";
        case ExperimentKind::ControllerStrength:
            return "strength";
    }
    return "unknown";
}

std::size_t ExperimentStats::generic_count() const {
    auto it = histogram.find(predicted);
    return it == histogram.end() ? 0 : it->second;
}

Rational ExperimentStats::fraction_generic() const {
    if (trials == 0) return 0;
    Rational f(static_cast<unsigned long>(generic_count()), static_cast<unsigned long>(trials));
    f.canonicalize();
    return f;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t z = master ^ (stream * 0xD1B54A32D192ED03ULL);
    z += (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

LaurentPoly sample_poly(const SampleSpec& spec, Rng& rng) {
    spec.validate();
    const std::vector<ExponentVector> support = monomials_up_to(spec.n, spec.degree_bound);
    // Uniform on the nonzero integers of [low, high].
    const long zeros = (spec.coeff_low <= 0 && spec.coeff_high >= 0) ? 1 : 0;
    std::uniform_int_distribution<long> coeff(spec.coeff_low, spec.coeff_high - zeros);
    std::bernoulli_distribution present(spec.density);
    while (true) {
        std::vector<Term> terms;
        for (const ExponentVector& e : support) {
            if (!present(rng)) continue;
            long c = coeff(rng);
            if (zeros && c >= 0) ++c;
            terms.push_back({Rational(c), e});
        }
        LaurentPoly p = LaurentPoly::from_terms(spec.n, std::move(terms));
        if (!p.is_zero()) return p;
    }
}

SystemMatrix sample_matrix(const SampleSpec& spec, Rng& rng) {
    SystemMatrix m(spec.n, spec.k);
    for (std::size_t i = 0; i < spec.rows; ++i) {
        SystemMatrix::Row row;
        for (std::size_t j = 0; j < spec.k; ++j) row.push_back(sample_poly(spec, rng));
        m.append_row(std::move(row));
    }
    return m;
}

DegreeValue generic_degree(std::size_t n, std::size_t k, std::size_t rows) {
    if (rows < k) return DegreeValue(0);
    const std::size_t s = rows - k + 1;
    if (s > n) return DegreeValue::infinity();
    return DegreeValue(static_cast<int>(s));
}

ExperimentStats expt_regular_sequences(const SampleSpec& spec, std::size_t trials, const RunOptions& opts) {
    spec.validate();
    if (spec.rows == 0 || spec.rows > spec.n)
        throw PreconditionError("regular sequence experiment needs 1 <= r <= n");
    const auto start = std::chrono::steady_clock::now();
    const std::size_t r = spec.rows;
    auto outcomes = run_trials(trials, opts, [&](std::size_t i) {
        Rng rng(trial_seed(spec.seed, 0, i));
        std::vector<LaurentPoly> seq = sample_tuple(spec, rng);
        const std::size_t prefix = regular_prefix_length(spec.n, seq);
        Outcome o{DegreeValue(static_cast<int>(prefix))};
        if (prefix == r) {
            // Cohen-Macaulay: a regular sequence of length r generates a
            // height-r ideal.
            o.violation = height(LaurentIdeal::from_gens(spec.n, seq)) != static_cast<int>(r);
        }
        return o;
    });
    return aggregate(ExperimentKind::RegularSequences, spec, trials, DegreeValue(static_cast<int>(r)), outcomes,
                     start);
}

ExperimentStats expt_unit_ideal(const SampleSpec& spec, std::size_t trials, const RunOptions& opts) {
    spec.validate();
    if (spec.rows <= spec.n) throw PreconditionError("unit ideal experiment needs r > n");
    const auto start = std::chrono::steady_clock::now();
    auto outcomes = run_trials(trials, opts, [&](std::size_t i) {
        Rng rng(trial_seed(spec.seed, 0, i));
        std::vector<LaurentPoly> gens = sample_tuple(spec, rng);
        LaurentIdeal ideal = LaurentIdeal::from_gens(spec.n, gens);
        if (ideal.is_unit()) return Outcome{DegreeValue::infinity()};
        const int h = height(ideal);
        // Krull: an ideal with r generators has height at most min(r, n).
        return Outcome{DegreeValue(h), h > static_cast<int>(spec.n)};
    });
    return aggregate(ExperimentKind::UnitIdeal, spec, trials, DegreeValue::infinity(), outcomes, start);
}

ExperimentStats expt_generic_degree(const SampleSpec& spec, std::size_t trials, const RunOptions& opts) {
    spec.validate();
    const auto start = std::chrono::steady_clock::now();
    const DegreeValue predicted = generic_degree(spec.n, spec.k, spec.rows);
    auto outcomes = run_trials(trials, opts, [&](std::size_t i) {
        Rng rng(trial_seed(spec.seed, 0, i));
        SystemMatrix m = sample_matrix(spec, rng);
        const DegreeValue d = degree_of_autonomy(m);
        bool violation = false;
        if (spec.rows < spec.k) {
            violation = d != DegreeValue(0);
        } else {
            // Macaulay: height of the ideal of maximal minors <= l - k + 1.
            violation = d.is_finite() && d.value() > static_cast<int>(spec.rows - spec.k + 1);
        }
        return Outcome{d, violation};
    });
    return aggregate(ExperimentKind::GenericDegree, spec, trials, predicted, outcomes, start);
}

ExperimentStats expt_controller_strength(const SampleSpec& plant_spec, const SampleSpec& controller_spec,
                                         std::size_t trials, const RunOptions& opts) {
    plant_spec.validate();
    controller_spec.validate();
    if (plant_spec.n != controller_spec.n || plant_spec.k != controller_spec.k)
        throw ValidationError("plant and controller must share n and k");
    const auto start = std::chrono::steady_clock::now();
    const DegreeValue predicted =
        generic_strength(plant_spec.n, plant_spec.k, plant_spec.rows, controller_spec.rows);
    auto outcomes = run_trials(trials, opts, [&](std::size_t i) {
        Rng plant_rng(trial_seed(plant_spec.seed, 0, i));
        Rng controller_rng(trial_seed(controller_spec.seed, 1, i));
        SystemMatrix plant = sample_matrix(plant_spec, plant_rng);
        SystemMatrix controller = sample_matrix(controller_spec, controller_rng);
        StrengthReport r = strength(plant, controller);
        const bool negative = r.strength.is_finite() && r.strength.value() < 0;
        return Outcome{r.strength, negative};
    });
    ExperimentStats stats =
        aggregate(ExperimentKind::ControllerStrength, plant_spec, trials, predicted, outcomes, start);
    stats.controller_rows = controller_spec.rows;
    return stats;
}

}  // namespace autonomy
