#include "lginv/json_io.hpp"

#include <doctest.h>

#include "lginv/wick.hpp"

using lginv::GSpec;
using lginv::InputError;
using lginv::InputSpec;
using lginv::MultiIndex;
using lginv::Rational;
using lginv::TruncatedSeries;
using nlohmann::json;

TEST_CASE("input spec parsing") {
    json j = json::parse(R"({
      "m": 2,
      "degree": 4,
      "g": [
        [ {"exp": [1, 0], "coeff": "1/2"}, {"exp": [0, 0], "coeff": "1"} ],
        "inv(1 - x2)"
      ]
    })");
    InputSpec spec = lginv::parse_input_spec(j);
    CHECK(spec.m == 2);
    CHECK(spec.degree == 4);
    REQUIRE(spec.g.size() == 2);
    CHECK(spec.g[0].terms.has_value());
    CHECK(spec.g[1].expr.has_value());

    GSpec gs = lginv::to_gspec(spec);
    CHECK(gs.g(0).coeff(MultiIndex{1, 0}) == Rational(1, 2));
    CHECK(gs.g(0).constant_term() == Rational(1));
    CHECK(gs.g(1).coeff(MultiIndex{0, 3}) == Rational(1));
}

TEST_CASE("input spec validation errors") {
    auto expect_error = [](const char* text) {
        CHECK_THROWS_AS(lginv::parse_input_spec(json::parse(text)), InputError);
    };
    expect_error(R"({"degree": 2, "g": []})");                      // missing m
    expect_error(R"({"m": 0, "degree": 2, "g": []})");              // m too small
    expect_error(R"({"m": 1, "degree": 2, "g": []})");              // wrong g count
    expect_error(R"({"m": 1, "degree": 2, "g": [5]})");             // bad entry type
    expect_error(R"({"m": 1, "degree": 2, "g": [[{"exp": [1, 2], "coeff": "1"}]]})");
    expect_error(R"({"m": 1, "degree": 2, "g": [[{"exp": [3], "coeff": "1"}]]})");
    expect_error(R"({"m": 1, "degree": 2, "g": [[{"exp": [1], "coeff": 7}]]})");
    expect_error(R"({"m": 1, "degree": 2, "g": [[{"exp": [1], "coeff": "1/0"}]]})");
    expect_error(R"({"m": 1, "degree": -1, "g": ["1"]})");          // negative degree
}

TEST_CASE("expression and term-list inputs agree downstream") {
    json expr_doc = json::parse(R"({
      "m": 1, "degree": 5,
      "g": ["1 + x1"]
    })");
    json terms = json::parse(R"({
      "m": 1, "degree": 5,
      "g": [[ {"exp": [0], "coeff": "1"}, {"exp": [1], "coeff": "1"} ]]
    })");
    GSpec a = lginv::to_gspec(lginv::parse_input_spec(expr_doc));
    GSpec b = lginv::to_gspec(lginv::parse_input_spec(terms));
    CHECK(a.g(0) == b.g(0));
    CHECK(solve_fixed_point(a).f() == solve_fixed_point(b).f());
}

TEST_CASE("canonical serialization is idempotent") {
    // unsorted, duplicated and unreduced input comes out canonical
    json j = json::parse(R"({
      "m": 2, "degree": 3,
      "g": [
        [ {"exp": [0, 1], "coeff": "2/4"},
          {"exp": [1, 0], "coeff": "1"},
          {"exp": [0, 1], "coeff": "1/2"},
          {"exp": [2, 0], "coeff": "0"} ],
        "exp(x1)"
      ]
    })");
    auto canonical = lginv::input_spec_to_json(lginv::parse_input_spec(j));
    CHECK(canonical["g"][0].size() == 2);
    CHECK(canonical["g"][0][0]["exp"] == json::parse("[1,0]"));
    CHECK(canonical["g"][0][1]["coeff"] == "1");  // 2/4 + 1/2 reduced
    CHECK(canonical["g"][1] == "exp(x1)");

    auto again = lginv::input_spec_to_json(lginv::parse_input_spec(canonical));
    CHECK(canonical.dump() == again.dump());
}

TEST_CASE("series serialization is graded-lex with exact strings") {
    TruncatedSeries s(2, 3);
    s.set_coeff(MultiIndex{2, 0}, Rational(-1, 2));
    s.set_coeff(MultiIndex{0, 1}, Rational(3));
    auto j = lginv::series_to_json(s);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["exp"] == nlohmann::ordered_json::parse("[0,1]"));
    CHECK(j[0]["coeff"] == "3");
    CHECK(j[1]["exp"] == nlohmann::ordered_json::parse("[2,0]"));
    CHECK(j[1]["coeff"] == "-1/2");
}

TEST_CASE("report serialization") {
    lginv::VerificationReport report;
    report.pass = false;
    report.cells.push_back({MultiIndex{0}, MultiIndex{1}, Rational(1), Rational(2), false});
    auto j = lginv::report_to_json(report);
    CHECK(j["pass"] == false);
    CHECK(j["cells"][0]["lhs"] == "1");
    CHECK(j["cells"][0]["rhs"] == "2");
    CHECK(j["cells"][0]["equal"] == false);
}

TEST_CASE("matrix parsing") {
    auto a = lginv::parse_matrix_inline("1,1;1,1");
    CHECK(a.size() == 2);
    CHECK(a[0][1] == Rational(1));

    auto b = lginv::parse_matrix_inline("1/2,0;-3,1");
    CHECK(b[0][0] == Rational(1, 2));
    CHECK(b[1][0] == Rational(-3));

    CHECK_THROWS_AS(lginv::parse_matrix_inline("1,1;1"), InputError);
    CHECK_THROWS_AS(lginv::parse_matrix_inline("1,2,3"), InputError);
    CHECK_THROWS_AS(lginv::parse_matrix_inline("a,b;c,d"), InputError);

    auto c = lginv::parse_matrix_json(json::parse(R"([["1","1/3"],[2,"0"]])"));
    CHECK(c[0][1] == Rational(1, 3));
    CHECK(c[1][0] == Rational(2));
    CHECK_THROWS_AS(lginv::parse_matrix_json(json::parse("[[1,2]]")), InputError);
}
