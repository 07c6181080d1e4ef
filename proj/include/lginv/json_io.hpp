#pragma once

#include "lginv/reversion.hpp"
#include "lginv/series.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lginv {

// Malformed or inconsistent input; the CLI maps it to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SeriesTerm {
    MultiIndex exp;
    Rational coeff;
};

// One g_i description: either an expression string or an explicit term list.
struct SeriesInput {
    std::optional<std::string> expr;
    std::optional<std::vector<SeriesTerm>> terms;
};

// The JSON problem description:
//   { "m": 2, "degree": 5, "g": [ <entry>, ... ] }
// where each entry is an expression string like "inv(1 - x1)" or an array of
// { "exp": [..], "coeff": "p/q" } objects. Coefficients are strings, never
// JSON numbers, so exactness survives the wire format.
struct InputSpec {
    std::size_t m = 0;
    unsigned degree = 0;
    std::vector<SeriesInput> g;
};

InputSpec parse_input_spec(const nlohmann::json& j);
InputSpec load_input_spec(const std::string& path);

// Evaluates the descriptions into the working series data.
GSpec to_gspec(const InputSpec& input);

// Canonical serialization: term lists come out merged, zero-free, graded-lex
// ordered with reduced fractions; expression entries are preserved verbatim.
// Serializing a parsed canonical document reproduces it byte for byte.
nlohmann::ordered_json input_spec_to_json(const InputSpec& input);

nlohmann::ordered_json series_to_json(const TruncatedSeries& s);
nlohmann::ordered_json report_to_json(const VerificationReport& report);

// "1,1;1,0" -> rows separated by ';', entries by ','; entries are rational
// literals.
std::vector<std::vector<Rational>> parse_matrix_inline(const std::string& text);
// JSON 2-D array; entries are rational strings (or integers).
std::vector<std::vector<Rational>> parse_matrix_json(const nlohmann::json& j);

}  // namespace lginv
