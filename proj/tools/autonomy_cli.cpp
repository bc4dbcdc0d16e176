// autonomy: degree of autonomy and controller strength for nD systems.
//
//   autonomy analyze  --input sys.txt [--format json|text]
//   autonomy strength --plant p.txt --controller c.txt
//   autonomy restrict --input sys.txt --keep 1,2
//   autonomy oracle   --input sys.txt
//   autonomy sample   --n 2 --k 1 --rows 2 --degree 2 --trials 100 --seed 42
//
// Exit status: 0 ok, 1 parse/validation error, 2 precondition violated,
// 3 Groebner step limit (AUTONOMY_GB_STEP_LIMIT) exceeded.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "autonomy/control.hpp"
#include "autonomy/errors.hpp"
#include "autonomy/genericity.hpp"
#include "autonomy/io.hpp"

using namespace autonomy;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kPrecondition = 2, kStepLimit = 3 };

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

SystemMatrix load_system(const std::string& path) {
    try {
        return parse_system(slurp(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.position());
    }
}

std::vector<std::size_t> parse_keep(const std::string& text, std::size_t n) {
    std::vector<std::size_t> keep;
    if (text.empty()) return keep;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            throw ValidationError("--keep: '" + item + "' is not an index");
        }
        if (used != item.size() || v < 1 || static_cast<std::size_t>(v) > n)
            throw ValidationError("--keep: index '" + item + "' outside 1.." + std::to_string(n));
        keep.push_back(static_cast<std::size_t>(v - 1));
    }
    return keep;
}

void parse_range(const std::string& text, long& lo, long& hi) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw ValidationError("--coeff-range expects lo..hi, got '" + text + "'");
    try {
        std::size_t a = 0, b = 0;
        const std::string left = text.substr(0, dots), right = text.substr(dots + 2);
        lo = std::stol(left, &a);
        hi = std::stol(right, &b);
        if (a != left.size() || b != right.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw ValidationError("--coeff-range expects lo..hi, got '" + text + "'");
    }
}

// "0.5" or "1/2".
double parse_density(const std::string& text) {
    try {
        std::size_t used = 0;
        if (auto slash = text.find('/'); slash != std::string::npos) {
            const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
            std::size_t u2 = 0;
            const double a = std::stod(num, &used), b = std::stod(den, &u2);
            if (used != num.size() || u2 != den.size() || b == 0) throw std::invalid_argument(text);
            return a / b;
        }
        const double q = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return q;
    } catch (const std::exception&) {
        throw ValidationError("--density expects a number in (0, 1], got '" + text + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degree of autonomy of multidimensional systems over Laurent polynomial rings"};
    app.require_subcommand(1);

    std::string format_name = "json";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "json or text")->check(CLI::IsMember({"json", "text"}));
    };

    std::string input;
    auto* analyze_cmd = app.add_subcommand("analyze", "degree of autonomy of a system file");
    analyze_cmd->add_option("--input", input, "system file ('-' for stdin)")->required();
    add_format(analyze_cmd);

    std::string plant_path, controller_path;
    auto* strength_cmd = app.add_subcommand("strength", "strength of a controller on a plant");
    strength_cmd->add_option("--plant", plant_path)->required();
    strength_cmd->add_option("--controller", controller_path)->required();
    add_format(strength_cmd);

    std::string keep_text;
    auto* restrict_cmd = app.add_subcommand("restrict", "restrict a scalar system to a coordinate sublattice");
    restrict_cmd->add_option("--input", input)->required();
    restrict_cmd->add_option("--keep", keep_text, "1-based coordinates to keep, e.g. 1,3")->required();
    add_format(restrict_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "degree of a scalar system by brute-force restriction");
    oracle_cmd->add_option("--input", input)->required();
    add_format(oracle_cmd);

    SampleSpec spec;
    std::size_t trials = 100;
    std::size_t controller_rows = 0;
    std::string range_text, density_text, experiment = "degree";
    unsigned threads = 0;
    auto* sample_cmd = app.add_subcommand("sample", "Monte-Carlo genericity experiment");
    sample_cmd->add_option("--n", spec.n)->required();
    sample_cmd->add_option("--k", spec.k)->required();
    sample_cmd->add_option("--rows", spec.rows, "rows l (or sequence length r)")->required();
    sample_cmd->add_option("--degree", spec.degree_bound, "Laurent degree bound d")->required();
    sample_cmd->add_option("--trials", trials)->required();
    sample_cmd->add_option("--seed", spec.seed)->required();
    sample_cmd->add_option("--coeff-range", range_text, "lo..hi (default -5..5)");
    sample_cmd->add_option("--density", density_text, "monomial density q in (0, 1]");
    sample_cmd->add_option("--experiment", experiment)
        ->check(CLI::IsMember({"degree", "regseq", "unit", "strength"}));
    sample_cmd->add_option("--controller-rows", controller_rows, "controller rows l' (strength)");
    sample_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
    add_format(sample_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        const ReportFormat format = parse_report_format(format_name);
        if (*analyze_cmd) {
            std::cout << write_report(analyze(load_system(input)), format);
        } else if (*strength_cmd) {
            std::cout << write_report(strength(load_system(plant_path), load_system(controller_path)), format);
        } else if (*restrict_cmd) {
            const SystemMatrix m = load_system(input);
            const SublatticeEmbedding emb(m.n(), parse_keep(keep_text, m.n()));
            const SystemMatrix r = restrict(m, emb);
            if (format == ReportFormat::Json) {
                Json out;
                out["system"] = format_system(r);
                out["report"] = to_json(analyze(r));
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << format_system(r) << "\n" << write_report(analyze(r), format);
            }
        } else if (*oracle_cmd) {
            const SystemMatrix m = load_system(input);
            const DegreeValue oracle = degree_by_restriction_oracle(m);
            const DegreeValue direct = degree_of_autonomy(m);
            Json out;
            out["n"] = m.n();
            out["degree_by_restriction_oracle"] = degree_to_json(oracle);
            out["degree_of_autonomy"] = degree_to_json(direct);
            out["agree"] = oracle == direct;
            if (format == ReportFormat::Json)
                std::cout << out.dump(2) << "\n";
            else
                for (const auto& [key, v] : out.items())
                    std::cout << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        } else if (*sample_cmd) {
            if (!range_text.empty()) parse_range(range_text, spec.coeff_low, spec.coeff_high);
            if (!density_text.empty()) spec.density = parse_density(density_text);
            const RunOptions opts{threads};
            ExperimentStats stats;
            if (experiment == "degree") {
                stats = expt_generic_degree(spec, trials, opts);
            } else if (experiment == "regseq") {
                stats = expt_regular_sequences(spec, trials, opts);
            } else if (experiment == "unit") {
                stats = expt_unit_ideal(spec, trials, opts);
            } else {
                if (controller_rows == 0) throw ValidationError("--experiment strength needs --controller-rows");
                SampleSpec cspec = spec;
                cspec.rows = controller_rows;
                stats = expt_controller_strength(spec, cspec, trials, opts);
            }
            std::cout << write_report(stats, format);
        }
    } catch (const StepLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kStepLimit;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }
    return kOk;
}
