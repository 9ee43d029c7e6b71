#include "chern/space_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "chern/expression.hpp"

namespace chern {

namespace {

struct Line {
    std::string key;
    std::string value;
    int number;
};

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

[[noreturn]] void schema_error(const std::string& message, int line) {
    throw ParseError("space file, line " + std::to_string(line) + ": " + message, line, 1,
                     "valid schema entry");
}

int parse_int(const std::string& text, int line, const std::string& what) {
    try {
        size_t used = 0;
        int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        schema_error("malformed integer for " + what + ": \"" + text + "\"", line);
    }
}

bool parse_bool(const std::string& text, int line, const std::string& what) {
    if (text == "true") return true;
    if (text == "false") return false;
    schema_error(what + " must be true or false, got \"" + text + "\"", line);
}

/// Raw monomial text "h^2*k" -> exponent vector; bypasses ring reduction so
/// relations above the truncation degree can still be declared.
std::vector<int> parse_monomial(const std::string& text, const CohomologyModel& model,
                                int line) {
    std::vector<int> exps(model.generators().size(), 0);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    bool first = true;
    while (pos < text.size()) {
        if (!first) {
            if (text[pos] != '*') schema_error("expected '*' between monomial factors", line);
            ++pos;
            skip_ws();
        }
        size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        if (pos == start) schema_error("expected generator name in monomial", line);
        std::string name = text.substr(start, pos - start);
        auto idx = model.generator_index(name);
        if (!idx) schema_error("unknown generator \"" + name + "\" in monomial", line);
        int exponent = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == dstart) schema_error("expected exponent digits after '^'", line);
            exponent = parse_int(text.substr(dstart, pos - dstart), line, "exponent");
        }
        exps[static_cast<size_t>(*idx)] += exponent;
        skip_ws();
        first = false;
    }
    if (first) schema_error("empty monomial", line);
    return exps;
}

}  // namespace

PolarizedSpace parse_space_text(std::string_view text, const std::string& origin) {
    std::vector<Line> lines;
    {
        int number = 0;
        std::string buffer(text);
        std::istringstream in(buffer);
        std::string raw;
        while (std::getline(in, raw)) {
            ++number;
            if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
            std::string stripped = trim(raw);
            if (stripped.empty()) continue;
            auto eq = stripped.find('=');
            if (eq == std::string::npos)
                schema_error("expected `key = value`", number);
            lines.push_back({trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)), number});
        }
    }

    std::string name, tangent_text, polarization_text, note;
    int tangent_line = 0, polarization_line = 0;
    std::optional<int> dim, ambient_dim;
    std::vector<Generator> generators;
    std::vector<std::pair<std::string, int>> relations, integrals;
    SpaceFlags flags;

    for (const Line& line : lines) {
        if (line.key == "name") name = line.value;
        else if (line.key == "dim") dim = parse_int(line.value, line.number, "dim");
        else if (line.key == "ambient_dim")
            ambient_dim = parse_int(line.value, line.number, "ambient_dim");
        else if (line.key == "generator") {
            auto colon = line.value.find(':');
            if (colon == std::string::npos)
                schema_error("generator needs `name : degree`", line.number);
            std::string gname = trim(line.value.substr(0, colon));
            int degree = parse_int(trim(line.value.substr(colon + 1)), line.number, "degree");
            generators.push_back({gname, degree});
        } else if (line.key == "relation") relations.emplace_back(line.value, line.number);
        else if (line.key == "integral") integrals.emplace_back(line.value, line.number);
        else if (line.key == "tangent_chern") {
            tangent_text = line.value;
            tangent_line = line.number;
        } else if (line.key == "polarization") {
            polarization_text = line.value;
            polarization_line = line.number;
        } else if (line.key == "very_ample")
            flags.polarization_very_ample = parse_bool(line.value, line.number, "very_ample");
        else if (line.key == "tangent_nef")
            flags.tangent_nef = parse_bool(line.value, line.number, "tangent_nef");
        else if (line.key == "canonical_ample_gg")
            flags.canonical_ample_gg =
                parse_bool(line.value, line.number, "canonical_ample_gg");
        else if (line.key == "note") note = line.value;
        else schema_error("unknown key \"" + line.key + "\"", line.number);
    }

    if (name.empty()) schema_error("missing required key `name`", 1);
    if (!dim) schema_error("missing required key `dim`", 1);
    if (generators.empty()) schema_error("missing `generator` entries", 1);
    if (integrals.empty()) schema_error("missing `integral` entries", 1);
    if (tangent_text.empty()) schema_error("missing required key `tangent_chern`", 1);
    if (polarization_text.empty()) schema_error("missing required key `polarization`", 1);

    auto model = std::make_shared<CohomologyModel>(*dim, generators);
    for (const auto& [rel, line] : relations) model->add_kill_rule(parse_monomial(rel, *model, line));
    for (const auto& [entry, line] : integrals) {
        auto colon = entry.find(':');
        if (colon == std::string::npos)
            schema_error("integral needs `monomial : value`", line);
        std::vector<int> exps = parse_monomial(trim(entry.substr(0, colon)), *model, line);
        Rational value;
        try {
            value = rational_from_string(trim(entry.substr(colon + 1)));
        } catch (const std::exception& e) {
            schema_error(e.what(), line);
        }
        if (model->monomial_degree(exps) != *dim)
            schema_error("integral monomial is not of top degree", line);
        model->set_integral(std::move(exps), std::move(value));
    }
    ModelPtr m = model;

    PolarizedSpace space;
    space.name = name;
    space.family = "file";
    space.model = m;
    space.n = *dim;
    space.N = ambient_dim;
    space.flags = flags;
    space.flags.notes = note.empty() ? "ingested from " + origin : note;
    space.tangent_chern = parse_model_expression(tangent_text, m);
    space.polarization = parse_model_expression(polarization_text, m);

    if (!space.tangent_chern.graded_part(0).is_one())
        schema_error("tangent_chern must have unit part 1", tangent_line);
    if (!space.polarization.is_zero() &&
        !(space.polarization.is_homogeneous() && space.polarization.degree() == 1))
        schema_error("polarization must be homogeneous of degree 1", polarization_line);
    if (space.flags.polarization_very_ample) {
        Rational top = integrate(space, space.polarization.pow(space.n));
        if (top <= 0)
            schema_error("very_ample asserted but the polarization has nonpositive top power", 1);
    }
    for (const auto& [lam, value] : chern_numbers(space)) {
        if (!is_integer(value)) {
            space.flags.notes += "; warning: non-integer Chern number " + to_string(value) +
                                 " at c_" + lam.to_string();
            break;
        }
    }
    return space;
}

PolarizedSpace load_space_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open space file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_space_text(buffer.str(), path);
}

}  // namespace chern
