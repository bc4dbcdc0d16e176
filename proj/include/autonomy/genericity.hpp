#pragma once

// Seeded Monte-Carlo estimates of how often random systems land in the
// generic sets: regular sequences, unit ideals, generic degree of autonomy
// and generic controller strength.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "autonomy/behavior.hpp"
#include "autonomy/degree.hpp"
#include "autonomy/laurent.hpp"

namespace autonomy {

using Rng = std::mt19937_64;

struct SampleSpec {
    std::size_t n = 2;
    std::size_t k = 1;
    std::size_t rows = 1;
    // Entries are supported on monomials with |d1|+...+|dn| <= degree_bound.
    std::size_t degree_bound = 1;
    long coeff_low = -5;
    long coeff_high = 5;
    // Probability that a given monomial is present.
    double density = 1.0;
    std::uint64_t seed = 42;

    // Throws ValidationError when inconsistent.
    void validate() const;
};

enum class ExperimentKind { RegularSequences, UnitIdeal, GenericDegree, ControllerStrength };

const char* to_string(ExperimentKind kind);

struct ExperimentStats {
    ExperimentKind kind = ExperimentKind::GenericDegree;
    SampleSpec spec;
    std::size_t controller_rows = 0;  // strength experiments only
    std::size_t trials = 0;
    // Regular sequences: length of the longest regular prefix.
    // Unit ideal: height of the ideal, infinity when it is the unit ideal.
    // Generic degree: degree of autonomy. Strength: controller strength.
    std::map<DegreeValue, std::size_t> histogram;
    DegreeValue predicted;
    // Trials that broke a hard bound (Macaulay ceiling, height of regular
    // sequences, non-negative strength). Always zero unless there is a bug.
    std::size_t violations = 0;
    std::chrono::duration<double> wall_time{0};

    std::size_t generic_count() const;
    // generic_count / trials; zero when there were no trials.
    Rational fraction_generic() const;
};

struct RunOptions {
    // Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

// Counter-based seed split (splitmix64), so trial i is independent of
// scheduling.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

LaurentPoly sample_poly(const SampleSpec& spec, Rng& rng);
// spec.rows x spec.k matrix of sampled entries.
SystemMatrix sample_matrix(const SampleSpec& spec, Rng& rng);

// Degree of autonomy a generic l x k system attains: 0 when l < k,
// l - k + 1 when that is at most n, infinity beyond.
DegreeValue generic_degree(std::size_t n, std::size_t k, std::size_t rows);

// r = spec.rows polynomials per trial, r <= n.
ExperimentStats expt_regular_sequences(const SampleSpec& spec, std::size_t trials, const RunOptions& opts = {});
// r = spec.rows polynomials per trial, r > n.
ExperimentStats expt_unit_ideal(const SampleSpec& spec, std::size_t trials, const RunOptions& opts = {});
ExperimentStats expt_generic_degree(const SampleSpec& spec, std::size_t trials, const RunOptions& opts = {});
ExperimentStats expt_controller_strength(const SampleSpec& plant_spec, const SampleSpec& controller_spec,
                                         std::size_t trials, const RunOptions& opts = {});

}  // namespace autonomy
