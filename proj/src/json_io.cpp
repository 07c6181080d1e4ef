#include "lginv/json_io.hpp"

#include "lginv/expression.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace lginv {

namespace {

unsigned long expect_uint(const nlohmann::json& j, const std::string& what) {
    if (!j.is_number_unsigned())
        throw InputError(what + " must be a nonnegative integer");
    return j.get<unsigned long>();
}

Rational parse_coeff_string(const nlohmann::json& j, const std::string& what) {
    if (!j.is_string())
        throw InputError(what + " must be a rational string like \"3\" or \"-1/2\"");
    try {
        return Rational::from_string(j.get<std::string>());
    } catch (const std::exception& e) {
        throw InputError(what + ": " + e.what());
    }
}

SeriesTerm parse_term(const nlohmann::json& j, std::size_t m, unsigned degree,
                      const std::string& where) {
    if (!j.is_object() || !j.contains("exp") || !j.contains("coeff"))
        throw InputError(where + ": each term needs an \"exp\" array and a \"coeff\" string");
    const nlohmann::json& je = j.at("exp");
    if (!je.is_array() || je.size() != m)
        throw InputError(where + ": \"exp\" must be an array of length m");
    MultiIndex e(m);
    for (std::size_t i = 0; i < m; ++i)
        e[i] = static_cast<unsigned>(expect_uint(je.at(i), where + ": exponent"));
    if (e.degree() > degree)
        throw InputError(where + ": term degree " + std::to_string(e.degree()) +
                         " exceeds the truncation degree " + std::to_string(degree));
    return {std::move(e), parse_coeff_string(j.at("coeff"), where + ": coefficient")};
}

}  // namespace

InputSpec parse_input_spec(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("input must be a JSON object");
    for (const auto& key : {"m", "degree", "g"})
        if (!j.contains(key))
            throw InputError(std::string("missing required field \"") + key + "\"");

    InputSpec spec;
    spec.m = expect_uint(j.at("m"), "\"m\"");
    if (spec.m == 0) throw InputError("\"m\" must be at least 1");
    spec.degree = static_cast<unsigned>(expect_uint(j.at("degree"), "\"degree\""));

    const nlohmann::json& g = j.at("g");
    if (!g.is_array() || g.size() != spec.m)
        throw InputError("\"g\" must be an array of exactly m series descriptions");

    for (std::size_t i = 0; i < spec.m; ++i) {
        const nlohmann::json& entry = g.at(i);
        std::string where = "g[" + std::to_string(i) + "]";
        SeriesInput si;
        if (entry.is_string()) {
            si.expr = entry.get<std::string>();
        } else if (entry.is_array()) {
            std::vector<SeriesTerm> terms;
            terms.reserve(entry.size());
            for (const auto& t : entry) terms.push_back(parse_term(t, spec.m, spec.degree, where));
            si.terms = std::move(terms);
        } else {
            throw InputError(where + " must be an expression string or an array of terms");
        }
        spec.g.push_back(std::move(si));
    }
    return spec;
}

InputSpec load_input_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("invalid JSON in '" + path + "': " + e.what());
    }
    return parse_input_spec(j);
}

GSpec to_gspec(const InputSpec& input) {
    std::vector<TruncatedSeries> g;
    g.reserve(input.m);
    for (std::size_t i = 0; i < input.m; ++i) {
        const SeriesInput& si = input.g[i];
        if (si.expr) {
            ExprPtr ast = parse_expression(*si.expr, input.m);
            g.push_back(evaluate(*ast, input.m, input.degree));
        } else {
            TruncatedSeries s(input.m, input.degree);
            for (const SeriesTerm& t : *si.terms) s.add_to_coeff(t.exp, t.coeff);
            g.push_back(std::move(s));
        }
    }
    return GSpec{SeriesVector(std::move(g))};
}

nlohmann::ordered_json series_to_json(const TruncatedSeries& s) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [e, c] : s.terms()) {
        nlohmann::ordered_json term;
        nlohmann::ordered_json exp = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < e.size(); ++i) exp.push_back(e[i]);
        term["exp"] = std::move(exp);
        term["coeff"] = c.str();
        out.push_back(std::move(term));
    }
    return out;
}

nlohmann::ordered_json input_spec_to_json(const InputSpec& input) {
    nlohmann::ordered_json out;
    out["m"] = input.m;
    out["degree"] = input.degree;
    nlohmann::ordered_json g = nlohmann::ordered_json::array();
    for (const SeriesInput& si : input.g) {
        if (si.expr) {
            g.push_back(*si.expr);
            continue;
        }
        // normalize: merge duplicates, drop zeros, graded-lex order
        std::map<MultiIndex, Rational, GradedLexLess> merged;
        for (const SeriesTerm& t : *si.terms) {
            auto [it, inserted] = merged.emplace(t.exp, t.coeff);
            if (!inserted) it->second += t.coeff;
        }
        nlohmann::ordered_json entry = nlohmann::ordered_json::array();
        for (const auto& [e, c] : merged) {
            if (c.is_zero()) continue;
            nlohmann::ordered_json term;
            nlohmann::ordered_json exp = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < e.size(); ++i) exp.push_back(e[i]);
            term["exp"] = std::move(exp);
            term["coeff"] = c.str();
            entry.push_back(std::move(term));
        }
        g.push_back(std::move(entry));
    }
    out["g"] = std::move(g);
    return out;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json out;
    out["pass"] = report.pass;
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const VerificationCell& cell : report.cells) {
        nlohmann::ordered_json c;
        nlohmann::ordered_json k = nlohmann::ordered_json::array();
        nlohmann::ordered_json n = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < cell.k.size(); ++i) k.push_back(cell.k[i]);
        for (std::size_t i = 0; i < cell.n.size(); ++i) n.push_back(cell.n[i]);
        c["k"] = std::move(k);
        c["n"] = std::move(n);
        c["lhs"] = cell.lhs.str();
        c["rhs"] = cell.rhs.str();
        c["equal"] = cell.equal;
        cells.push_back(std::move(c));
    }
    out["cells"] = std::move(cells);
    return out;
}

std::vector<std::vector<Rational>> parse_matrix_inline(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::stringstream row_stream(text);
    std::string row_text;
    while (std::getline(row_stream, row_text, ';')) {
        std::vector<Rational> row;
        std::stringstream entry_stream(row_text);
        std::string entry;
        while (std::getline(entry_stream, entry, ',')) {
            try {
                row.push_back(Rational::from_string(entry));
            } catch (const std::exception& e) {
                throw InputError(std::string("bad matrix entry: ") + e.what());
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InputError("empty matrix");
    for (const auto& row : rows)
        if (row.size() != rows.size())
            throw InputError("matrix must be square (rows ';', entries ',')");
    return rows;
}

std::vector<std::vector<Rational>> parse_matrix_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw InputError("matrix must be a nonempty 2-D array");
    std::vector<std::vector<Rational>> rows;
    for (const auto& jrow : j) {
        if (!jrow.is_array()) throw InputError("matrix rows must be arrays");
        std::vector<Rational> row;
        for (const auto& entry : jrow) {
            if (entry.is_number_integer())
                row.push_back(Rational(entry.get<long>()));
            else
                row.push_back(parse_coeff_string(entry, "matrix entry"));
        }
        rows.push_back(std::move(row));
    }
    for (const auto& row : rows)
        if (row.size() != rows.size()) throw InputError("matrix must be square");
    return rows;
}

}  // namespace lginv
