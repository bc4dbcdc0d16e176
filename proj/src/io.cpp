#include "autonomy/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "autonomy/errors.hpp"

namespace autonomy {

namespace {

constexpr long kMaxExponent = 1 << 16;

// Recursive descent over
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' exponent)?
//   atom   := integer ('/' integer)? | 's' integer | '(' expr ')'
class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t n, std::size_t base) : text_(text), n_(n), base_(base) {}

    LaurentPoly parse() {
        LaurentPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
        throw ParseError(msg + " at offset " + std::to_string(base_ + at), base_ + at);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

    std::string_view digits() {
        const std::size_t start = pos_;
        while (at_digit()) ++pos_;
        if (start == pos_) fail("expected a number");
        return text_.substr(start, pos_ - start);
    }

    long small_integer() {
        const std::size_t start = pos_;
        std::string_view d = digits();
        long v = 0;
        auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
        if (ec != std::errc() || v > kMaxExponent) fail_at("integer too large", start);
        return v;
    }

    LaurentPoly expr() {
        LaurentPoly acc = term();
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    LaurentPoly term() {
        LaurentPoly acc = unary();
        while (accept('*')) acc *= unary();
        return acc;
    }

    LaurentPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    LaurentPoly power() {
        LaurentPoly base = atom();
        if (!accept('^')) return base;
        skip_ws();
        const std::size_t at = pos_;
        const bool paren = accept('(');
        bool negative = false;
        if (accept('-'))
            negative = true;
        else
            accept('+');
        skip_ws();
        long e = small_integer();
        if (paren && !accept(')')) fail("expected ')'");
        if (negative) e = -e;
        if (e < 0 && !is_unit(base)) fail_at("negative power of a non-monomial", at);
        return pow(base, static_cast<int>(e));
    }

    LaurentPoly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == 's') {
            const std::size_t at = pos_;
            ++pos_;
            if (!at_digit()) fail("expected a variable index after 's'");
            const long idx = small_integer();
            if (idx < 1 || static_cast<std::size_t>(idx) > n_)
                fail_at("variable s" + std::to_string(idx) + " out of range 1.." + std::to_string(n_), at);
            return LaurentPoly::variable(n_, static_cast<std::size_t>(idx - 1));
        }
        if (at_digit()) {
            Integer num{std::string(digits())};
            Integer den = 1;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                skip_ws();
                const std::size_t at = pos_;
                den = Integer(std::string(digits()));
                if (den == 0) fail_at("zero denominator", at);
            }
            Rational q(num, den);
            q.canonicalize();
            return LaurentPoly::constant(n_, q);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t n_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

LaurentPoly parse_poly_at(std::string_view text, std::size_t n, std::size_t base) {
    if (n > kMaxVariables) throw ValidationError("too many variables: " + std::to_string(n));
    return PolyParser(text, n, base).parse();
}

std::string format_monomial(const ExponentVector& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 's' + std::to_string(i + 1);
        if (e[i] != 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

struct Line {
    std::string_view text;
    std::size_t offset;
};

// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) out.push_back({line, start});
        start = end + 1;
    }
    return out;
}

std::size_t header_field(std::istringstream& in, const char* name, std::size_t offset) {
    long long v = -1;
    if (!(in >> v) || v < 0) throw ParseError(std::string("header: expected non-negative ") + name, offset);
    return static_cast<std::size_t>(v);
}

Json histogram_to_json(const std::map<DegreeValue, std::size_t>& h) {
    Json j = Json::object();
    for (const auto& [key, count] : h) j[key.to_string()] = count;
    return j;
}

// --- text layout ---------------------------------------------------------

std::string scalar_text(const Json& v) {
    if (v.is_null()) return "none";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void text_lines(const Json& obj, std::string& out) {
    for (const auto& [key, v] : obj.items()) {
        if (v.is_array()) {
            if (v.empty()) {
                out += key + ": []\n";
                continue;
            }
            out += key + ":\n";
            for (const Json& e : v) out += "  " + scalar_text(e) + "\n";
        } else if (v.is_object()) {
            if (v.empty()) {
                out += key + ": {}\n";
                continue;
            }
            out += key + ":\n";
            for (const auto& [k2, e] : v.items()) out += "  " + k2 + ": " + scalar_text(e) + "\n";
        } else {
            out += key + ": " + scalar_text(v) + "\n";
        }
    }
}

Json scalar_from_text(std::string_view s) {
    if (s == "none") return nullptr;
    if (s == "true") return true;
    if (s == "false") return false;
    if (!s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-')) {
        Json j = Json::parse(s, nullptr, false);
        if (!j.is_discarded() && j.is_number()) return j;
    }
    return std::string(s);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

template <class Report>
std::string render(const Report& r, ReportFormat format) {
    const Json j = to_json(r);
    if (format == ReportFormat::Json) return j.dump(2) + "\n";
    std::string out;
    text_lines(j, out);
    return out;
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw ValidationError(std::string("report is missing field '") + name + "'");
    return j.at(name);
}

template <class T>
T get(const Json& j, const char* name) {
    try {
        return field(j, name).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad field '") + name + "': " + e.what());
    }
}

}  // namespace

LaurentPoly parse_poly(std::string_view text, std::size_t n) { return parse_poly_at(text, n, 0); }

std::string format_poly(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : p.terms()) {
        const bool negative = sgn(t.coeff) < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const Rational mag = abs(t.coeff);
        const std::string mon = format_monomial(t.monomial);
        if (mon.empty()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += mon;
        }
    }
    return out;
}

SystemMatrix parse_system(std::string_view text) {
    const std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw ParseError("missing header line 'n k l'", 0);
    std::istringstream header{std::string(lines[0].text)};
    const std::size_t n = header_field(header, "n", lines[0].offset);
    const std::size_t k = header_field(header, "k", lines[0].offset);
    const std::size_t l = header_field(header, "l", lines[0].offset);
    std::string rest;
    if (header >> rest) throw ParseError("header: trailing '" + rest + "'", lines[0].offset);
    if (k == 0) throw ParseError("header: k must be positive", lines[0].offset);
    if (n > kMaxVariables) throw ParseError("header: at most " + std::to_string(kMaxVariables) + " variables",
                                            lines[0].offset);
    if (lines.size() - 1 != l)
        throw ParseError("header declares " + std::to_string(l) + " rows but " + std::to_string(lines.size() - 1) +
                             " follow",
                         lines.size() > l + 1 ? lines[l + 1].offset : text.size());
    SystemMatrix m(n, k);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        SystemMatrix::Row row;
        std::size_t start = 0;
        while (true) {
            std::size_t semi = line.text.find(';', start);
            std::string_view cell =
                line.text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
            row.push_back(parse_poly_at(cell, n, line.offset + start));
            if (semi == std::string_view::npos) break;
            start = semi + 1;
        }
        if (row.size() != k)
            throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(k),
                             line.offset);
        m.append_row(std::move(row));
    }
    return m;
}

std::string format_system(const SystemMatrix& m) {
    std::string out = std::to_string(m.n()) + " " + std::to_string(m.k()) + " " + std::to_string(m.rows()) + "\n";
    for (const auto& row : m.row_data()) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += "; ";
            out += format_poly(row[j]);
        }
        out += "\n";
    }
    return out;
}

ReportFormat parse_report_format(std::string_view name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "text") return ReportFormat::Text;
    throw ValidationError("unknown format '" + std::string(name) + "' (expected json or text)");
}

Json degree_to_json(DegreeValue d) {
    if (d.is_infinite()) return "infinity";
    return d.value();
}

DegreeValue degree_from_json(const Json& j) {
    if (j.is_string()) return DegreeValue::parse(j.get<std::string>());
    if (j.is_number_integer()) return DegreeValue(j.get<int>());
    throw ValidationError("degree must be an integer or \"infinity\"");
}

Json to_json(const AutonomyReport& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["rows"] = r.rows;
    j["degree_of_autonomy"] = degree_to_json(r.degree);
    j["autonomous"] = r.autonomous;
    j["strongly_autonomous"] = r.strongly_autonomous;
    j["zero_behavior"] = r.zero_behavior;
    j["under_determined"] = r.under_determined;
    j["char_ideal_dimension"] = r.char_ideal_dim ? Json(*r.char_ideal_dim) : Json(nullptr);
    Json gens = Json::array();
    for (const LaurentPoly& g : r.char_ideal_gens) gens.push_back(format_poly(g));
    j["char_ideal_generators"] = gens;
    return j;
}

Json to_json(const StrengthReport& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["rows"] = r.plant_rows + r.controller_rows;
    j["plant_rows"] = r.plant_rows;
    j["controller_rows"] = r.controller_rows;
    j["delta_plant"] = degree_to_json(r.delta_plant);
    j["delta_controlled"] = degree_to_json(r.delta_controlled);
    j["strength"] = degree_to_json(r.strength);
    j["generic_bound"] = degree_to_json(r.generic_bound);
    j["max_efficient"] = r.max_efficient;
    return j;
}

Json to_json(const ExperimentStats& s) {
    Json j;
    j["experiment"] = to_string(s.kind);
    j["n"] = s.spec.n;
    j["k"] = s.spec.k;
    j["rows"] = s.spec.rows;
    if (s.kind == ExperimentKind::ControllerStrength) j["controller_rows"] = s.controller_rows;
    j["degree_bound"] = s.spec.degree_bound;
    j["coeff_low"] = s.spec.coeff_low;
    j["coeff_high"] = s.spec.coeff_high;
    j["density"] = s.spec.density;
    j["seed"] = s.spec.seed;
    j["trials"] = s.trials;
    j["histogram"] = histogram_to_json(s.histogram);
    j["predicted"] = degree_to_json(s.predicted);
    j["generic_count"] = s.generic_count();
    j["fraction_generic"] = s.fraction_generic().get_d();
    j["violations"] = s.violations;
    j["wall_time_seconds"] = s.wall_time.count();
    return j;
}

AutonomyReport autonomy_report_from_json(const Json& j) {
    AutonomyReport r;
    r.n = get<std::size_t>(j, "n");
    r.k = get<std::size_t>(j, "k");
    r.rows = get<std::size_t>(j, "rows");
    r.degree = degree_from_json(field(j, "degree_of_autonomy"));
    r.autonomous = get<bool>(j, "autonomous");
    r.strongly_autonomous = get<bool>(j, "strongly_autonomous");
    r.zero_behavior = get<bool>(j, "zero_behavior");
    r.under_determined = get<bool>(j, "under_determined");
    const Json& dim = field(j, "char_ideal_dimension");
    if (!dim.is_null()) r.char_ideal_dim = get<int>(j, "char_ideal_dimension");
    for (const Json& g : field(j, "char_ideal_generators"))
        r.char_ideal_gens.push_back(parse_poly(g.get<std::string>(), r.n));
    return r;
}

StrengthReport strength_report_from_json(const Json& j) {
    StrengthReport r;
    r.n = get<std::size_t>(j, "n");
    r.k = get<std::size_t>(j, "k");
    r.plant_rows = get<std::size_t>(j, "plant_rows");
    r.controller_rows = get<std::size_t>(j, "controller_rows");
    r.delta_plant = degree_from_json(field(j, "delta_plant"));
    r.delta_controlled = degree_from_json(field(j, "delta_controlled"));
    r.strength = degree_from_json(field(j, "strength"));
    r.generic_bound = degree_from_json(field(j, "generic_bound"));
    r.max_efficient = get<bool>(j, "max_efficient");
    return r;
}

ExperimentStats experiment_stats_from_json(const Json& j) {
    ExperimentStats s;
    const std::string kind = get<std::string>(j, "experiment");
    bool known = false;
    for (ExperimentKind k : {ExperimentKind::RegularSequences, ExperimentKind::UnitIdeal,
                             ExperimentKind::GenericDegree, ExperimentKind::ControllerStrength}) {
        if (kind == to_string(k)) {
            s.kind = k;
            known = true;
        }
    }
    if (!known) throw ValidationError("unknown experiment '" + kind + "'");
    s.spec.n = get<std::size_t>(j, "n");
    s.spec.k = get<std::size_t>(j, "k");
    s.spec.rows = get<std::size_t>(j, "rows");
    if (s.kind == ExperimentKind::ControllerStrength) s.controller_rows = get<std::size_t>(j, "controller_rows");
    s.spec.degree_bound = get<std::size_t>(j, "degree_bound");
    s.spec.coeff_low = get<long>(j, "coeff_low");
    s.spec.coeff_high = get<long>(j, "coeff_high");
    s.spec.density = get<double>(j, "density");
    s.spec.seed = get<std::uint64_t>(j, "seed");
    s.trials = get<std::size_t>(j, "trials");
    for (const auto& [key, count] : field(j, "histogram").items())
        s.histogram[DegreeValue::parse(key)] = count.get<std::size_t>();
    s.predicted = degree_from_json(field(j, "predicted"));
    s.violations = get<std::size_t>(j, "violations");
    s.wall_time = std::chrono::duration<double>(get<double>(j, "wall_time_seconds"));
    return s;
}

std::string write_report(const AutonomyReport& r, ReportFormat format) { return render(r, format); }
std::string write_report(const StrengthReport& r, ReportFormat format) { return render(r, format); }
std::string write_report(const ExperimentStats& s, ReportFormat format) { return render(s, format); }

Json parse_text_report(std::string_view text) {
    Json out = Json::object();
    std::string open_key;  // key whose indented block we are inside
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        const std::size_t offset = start;
        start = end + 1;
        if (trim(line).empty()) continue;
        if (line.substr(0, 2) == "  ") {
            if (open_key.empty()) throw ParseError("indented line outside a block", offset);
            std::string_view body = trim(line);
            Json& block = out[open_key];
            const std::size_t colon = body.find(": ");
            // Generators never contain ':', so a colon marks a map entry.
            if (colon != std::string_view::npos && !block.is_array()) {
                if (block.is_null()) block = Json::object();
                block[std::string(trim(body.substr(0, colon)))] = scalar_from_text(trim(body.substr(colon + 2)));
            } else {
                if (block.is_null()) block = Json::array();
                if (!block.is_array()) throw ParseError("mixed list and map entries", offset);
                block.push_back(std::string(body));
            }
            continue;
        }
        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError("expected 'key: value'", offset);
        const std::string key(trim(line.substr(0, colon)));
        const std::string_view value = trim(line.substr(colon + 1));
        open_key.clear();
        if (value.empty()) {
            out[key] = nullptr;
            open_key = key;
        } else if (value == "[]") {
            out[key] = Json::array();
        } else if (value == "{}") {
            out[key] = Json::object();
        } else {
            out[key] = scalar_from_text(value);
        }
    }
    return out;
}

Json parse_report(std::string_view text) {
    std::string_view t = trim(text);
    if (!t.empty() && t.front() == '{') {
        Json j = Json::parse(t, nullptr, false);
        if (j.is_discarded()) throw ParseError("malformed JSON report", 0);
        return j;
    }
    return parse_text_report(text);
}

}  // namespace autonomy
