#include "lginv/cli.hpp"

#include "lginv/expression.hpp"
#include "lginv/json_io.hpp"
#include "lginv/wick.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

namespace lginv::cli {

namespace {

MultiIndex parse_csv_indices(const std::string& text, std::size_t expected_len,
                             const std::string& what) {
    std::vector<unsigned> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(item, &used);
            if (used != item.size() || item.find('-') != std::string::npos)
                throw std::invalid_argument("not a nonnegative integer");
            values.push_back(static_cast<unsigned>(v));
        } catch (const std::exception&) {
            throw InputError(what + ": '" + item + "' is not a nonnegative integer");
        }
    }
    if (values.size() != expected_len)
        throw InputError(what + " must list exactly " + std::to_string(expected_len) +
                         " comma-separated integers");
    return MultiIndex(std::move(values));
}

void emit_json(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

struct QftCheck {
    std::string name;
    bool pass;
};

int report_exit(bool pass) { return pass ? kExitPass : kExitMismatch; }

// ---- revert ----------------------------------------------------------

int cmd_revert(const std::string& input_path, bool as_json) {
    InputSpec input = load_input_spec(input_path);
    GSpec spec = to_gspec(input);
    ReversionProblem prob = solve_fixed_point(spec);

    if (as_json) {
        nlohmann::ordered_json out;
        out["m"] = input.m;
        out["degree"] = input.degree;
        nlohmann::ordered_json f = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < input.m; ++i) f.push_back(series_to_json(prob.f()[i]));
        out["f"] = std::move(f);
        emit_json(out);
    } else {
        std::cout << "m = " << input.m << ", degree = " << input.degree << "\n";
        for (std::size_t i = 0; i < input.m; ++i)
            std::cout << "f" << (i + 1) << " = " << prob.f()[i].str() << "\n";
    }
    return kExitPass;
}

// ---- verify ----------------------------------------------------------

int cmd_verify(const std::string& input_path, const std::string& kmax_text,
               std::optional<unsigned> ndeg, bool as_json) {
    InputSpec input = load_input_spec(input_path);
    GSpec spec = to_gspec(input);
    MultiIndex k_max = parse_csv_indices(kmax_text, input.m, "--kmax");
    unsigned n_degree_max = ndeg.value_or(input.degree);
    if (n_degree_max > input.degree)
        throw InputError("--ndeg exceeds the input truncation degree");

    VerificationReport report = verify_theorem(spec, k_max, n_degree_max);
    if (as_json) {
        emit_json(report_to_json(report));
    } else {
        for (const VerificationCell& cell : report.cells)
            if (!cell.equal)
                std::cout << "MISMATCH k=" << cell.k.str() << " n=" << cell.n.str()
                          << " lhs=" << cell.lhs << " rhs=" << cell.rhs << "\n";
        std::cout << "checked " << report.cells.size()
                  << " coefficient identities: " << (report.pass ? "PASS" : "FAIL") << "\n";
    }
    return exit_code_for(report);
}

// ---- coeff -----------------------------------------------------------

int cmd_coeff(const std::string& input_path, const std::string& side,
              const std::string& k_text, const std::string& n_text) {
    InputSpec input = load_input_spec(input_path);
    GSpec spec = to_gspec(input);
    MultiIndex k = parse_csv_indices(k_text, input.m, "--k");
    MultiIndex n = parse_csv_indices(n_text, input.m, "--n");

    Rational value;
    if (side == "lhs")
        value = lhs_coeff(spec, k, n);
    else if (side == "rhs")
        value = rhs_coeff(solve_fixed_point(spec), k, n);
    else
        throw InputError("--side must be 'lhs' or 'rhs'");
    std::cout << value << "\n";
    return kExitPass;
}

// ---- macmahon --------------------------------------------------------

int cmd_macmahon(const std::string& matrix_arg, unsigned ndeg, bool as_json) {
    std::vector<std::vector<Rational>> A;
    if (std::filesystem::exists(matrix_arg)) {
        std::ifstream in(matrix_arg);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw InputError("invalid JSON matrix file: " + std::string(e.what()));
        }
        A = parse_matrix_json(j);
    } else {
        A = parse_matrix_inline(matrix_arg);
    }

    std::size_t m = A.size();
    VerificationReport report;
    for (const MultiIndex& n : indices_up_to_degree(m, ndeg)) {
        auto [lhs, rhs] = macmahon_check(A, n);
        bool equal = lhs == rhs;
        if (!equal) report.pass = false;
        report.cells.push_back({MultiIndex(m), n, lhs, rhs, equal});
    }

    if (as_json) {
        emit_json(report_to_json(report));
    } else {
        for (const VerificationCell& cell : report.cells)
            std::cout << "n=" << cell.n.str() << ": product=" << cell.lhs
                      << " determinant=" << cell.rhs << (cell.equal ? " ok" : " MISMATCH")
                      << "\n";
        std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
    }
    return exit_code_for(report);
}

// ---- qft-check -------------------------------------------------------

int cmd_qft_check(const std::string& input_path, const std::optional<std::string>& kmax_text,
                  bool as_json) {
    InputSpec input = load_input_spec(input_path);
    GSpec spec = to_gspec(input);
    std::size_t m = input.m;
    unsigned cap = input.degree;

    MultiIndex k_max(m);
    for (std::size_t i = 0; i < m; ++i) k_max[i] = 2;
    if (kmax_text) k_max = parse_csv_indices(*kmax_text, m, "--kmax");

    ReversionProblem prob = solve_fixed_point(spec);
    TruncatedSeries z = partition_series(spec);
    TruncatedSeries lg_det = det(lg_matrix(prob));
    TruncatedSeries one = TruncatedSeries::one(m, cap);

    std::vector<QftCheck> checks;
    for (std::size_t i = 0; i < m; ++i) {
        CorrelatorSeries moment = normalized_moment(MultiIndex::unit(m, i), spec);
        checks.push_back({"one_point_f" + std::to_string(i + 1), moment.value == prob.f()[i]});
    }
    checks.push_back({"partition_times_determinant", z * lg_det == one});
    for (const MultiIndex& k : indices_in_box(k_max)) {
        TruncatedSeries expected = one / factorial_product(k);
        for (std::size_t i = 0; i < m; ++i)
            if (k[i] > 0) expected = expected * prob.f()[i].pow(k[i]);
        CorrelatorSeries moment = normalized_moment(k, spec);
        checks.push_back({"factorization_k=" + k.str(), moment.value == expected});
    }

    bool pass = true;
    for (const QftCheck& c : checks) pass = pass && c.pass;

    if (as_json) {
        nlohmann::ordered_json out;
        out["pass"] = pass;
        nlohmann::ordered_json jchecks = nlohmann::ordered_json::array();
        for (const QftCheck& c : checks) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            jchecks.push_back(std::move(jc));
        }
        out["checks"] = std::move(jchecks);
        emit_json(out);
    } else {
        for (const QftCheck& c : checks)
            std::cout << (c.pass ? "[ok]   " : "[FAIL] ") << c.name << "\n";
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    }
    return report_exit(pass);
}

// ---- demo ------------------------------------------------------------

// C_0, C_1, ... via the convolution recurrence
std::vector<Rational> catalan_numbers(std::size_t count) {
    std::vector<Rational> c{Rational(1)};
    while (c.size() < count) {
        Rational next(0);
        for (std::size_t i = 0; i < c.size(); ++i) next += c[i] * c[c.size() - 1 - i];
        c.push_back(next);
    }
    return c;
}

Rational integer_power(unsigned long base, unsigned long e) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), base, e);
    return Rational(std::move(v), mpz_class(1));
}

Rational binomial(unsigned long n, unsigned long k) {
    return Rational::factorial(n) / (Rational::factorial(k) * Rational::factorial(n - k));
}

int cmd_demo(const std::string& which, std::optional<unsigned> degree_opt) {
    bool all_ok = true;
    auto row = [&](const std::string& label, const Rational& got, const Rational& expected) {
        bool ok = got == expected;
        all_ok = all_ok && ok;
        std::cout << "  " << std::left << std::setw(10) << label << std::setw(16) << got.str()
                  << std::setw(16) << expected.str() << (ok ? "ok" : "MISMATCH") << "\n";
    };

    if (which == "catalan") {
        unsigned degree = degree_opt.value_or(6);
        std::cout << "Catalan numbers from f = x1*g(f), g = inv(1 - x1), degree " << degree
                  << "\n";
        std::cout << "  " << std::left << std::setw(10) << "n" << std::setw(16) << "[x1^n] f"
                  << std::setw(16) << "C(n-1)" << "\n";
        ExprPtr g = parse_expression("inv(1 - x1)", 1);
        GSpec spec{SeriesVector({evaluate(*g, 1, degree)})};
        ReversionProblem prob = solve_fixed_point(spec);
        std::vector<Rational> catalan = catalan_numbers(degree);
        for (unsigned n = 1; n <= degree; ++n)
            row(std::to_string(n), prob.f()[0].coeff(MultiIndex{n}), catalan[n - 1]);
    } else if (which == "cayley") {
        unsigned degree = degree_opt.value_or(5);
        std::cout << "Labeled rooted trees from f = x1*g(f), g = exp(x1), degree " << degree
                  << "\n";
        std::cout << "  " << std::left << std::setw(10) << "n" << std::setw(16) << "n!*[x1^n] f"
                  << std::setw(16) << "n^(n-1)" << "\n";
        ExprPtr g = parse_expression("exp(x1)", 1);
        GSpec spec{SeriesVector({evaluate(*g, 1, degree)})};
        ReversionProblem prob = solve_fixed_point(spec);
        for (unsigned n = 1; n <= degree; ++n)
            row(std::to_string(n), prob.f()[0].coeff_factorial(MultiIndex{n}),
                integer_power(n, n - 1));
    } else if (which == "macmahon") {
        unsigned degree = degree_opt.value_or(4);
        std::cout << "Master theorem for the all-ones 2x2 matrix, degrees up to " << degree
                  << "\n";
        std::cout << "  " << std::left << std::setw(10) << "n" << std::setw(16) << "product"
                  << std::setw(16) << "determinant" << "\n";
        std::vector<std::vector<Rational>> A{{Rational(1), Rational(1)},
                                             {Rational(1), Rational(1)}};
        for (const MultiIndex& n : indices_up_to_degree(2, degree)) {
            auto [lhs, rhs] = macmahon_check(A, n);
            // 1/(1 - x1 - x2) expands into multinomial coefficients
            Rational expected = binomial(n.degree(), n[0]);
            bool ok = lhs == expected && rhs == expected;
            all_ok = all_ok && ok;
            std::cout << "  " << std::left << std::setw(10) << n.str() << std::setw(16)
                      << lhs.str() << std::setw(16) << rhs.str() << (ok ? "ok" : "MISMATCH")
                      << "\n";
        }
    } else {
        throw InputError("unknown demo '" + which + "' (expected catalan, cayley or macmahon)");
    }
    std::cout << (all_ok ? "PASS" : "FAIL") << "\n";
    return report_exit(all_ok);
}

}  // namespace

int exit_code_for(const VerificationReport& report) {
    return report.pass ? kExitPass : kExitMismatch;
}

int run(int argc, const char* const* argv) {
    CLI::App app{"Exact verification of the Lagrange-Good inversion identity"};
    app.require_subcommand(1);

    std::string input_path, kmax_text, k_text, n_text, side, matrix_arg, demo_name;
    bool as_json = false;
    unsigned ndeg_value = 0, macmahon_ndeg = 0;
    unsigned demo_degree_value = 0;
    bool has_ndeg = false, has_demo_degree = false;
    std::string qft_kmax;
    bool has_qft_kmax = false;

    CLI::App* revert = app.add_subcommand("revert", "solve f_i = x_i*g_i(f) and print f");
    revert->add_option("--input", input_path, "input spec JSON file")->required();
    revert->add_flag("--json", as_json, "machine-readable output");

    CLI::App* verify = app.add_subcommand("verify", "check both sides of the inversion identity");
    verify->add_option("--input", input_path, "input spec JSON file")->required();
    verify->add_option("--kmax", kmax_text, "componentwise bound for k, e.g. 2,2")->required();
    verify->add_option("--ndeg", ndeg_value, "max total degree of n (default: input degree)")
        ->check(CLI::NonNegativeNumber);
    verify->add_flag("--json", as_json, "machine-readable report");

    CLI::App* coeff = app.add_subcommand("coeff", "print a single identity-side coefficient");
    coeff->add_option("--input", input_path, "input spec JSON file")->required();
    coeff->add_option("--side", side, "lhs or rhs")->required();
    coeff->add_option("--k", k_text, "source exponents, comma-separated")->required();
    coeff->add_option("--n", n_text, "target exponents, comma-separated")->required();

    CLI::App* macmahon = app.add_subcommand("macmahon", "linear special case over a matrix");
    macmahon->add_option("--matrix", matrix_arg, "inline rows like '1,1;1,1' or a JSON file")
        ->required();
    macmahon->add_option("--ndeg", macmahon_ndeg, "check all |n| up to this degree")->required();
    macmahon->add_flag("--json", as_json, "machine-readable report");

    CLI::App* qft = app.add_subcommand("qft-check",
                                       "Gaussian-moment oracle against the reversion solution");
    qft->add_option("--input", input_path, "input spec JSON file")->required();
    qft->add_option("--kmax", qft_kmax, "factorization box bound (default 2,...,2)");
    qft->add_flag("--json", as_json, "machine-readable report");

    CLI::App* demo = app.add_subcommand("demo", "built-in showcase runs");
    demo->add_option("name", demo_name, "catalan, cayley or macmahon")->required();
    demo->add_option("--degree", demo_degree_value, "truncation degree override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    has_ndeg = verify->count("--ndeg") > 0;
    has_qft_kmax = qft->count("--kmax") > 0;
    has_demo_degree = demo->count("--degree") > 0;

    try {
        if (app.got_subcommand(revert)) return cmd_revert(input_path, as_json);
        if (app.got_subcommand(verify))
            return cmd_verify(input_path, kmax_text,
                              has_ndeg ? std::optional<unsigned>(ndeg_value) : std::nullopt,
                              as_json);
        if (app.got_subcommand(coeff)) return cmd_coeff(input_path, side, k_text, n_text);
        if (app.got_subcommand(macmahon)) return cmd_macmahon(matrix_arg, macmahon_ndeg, as_json);
        if (app.got_subcommand(qft))
            return cmd_qft_check(
                input_path, has_qft_kmax ? std::optional<std::string>(qft_kmax) : std::nullopt,
                as_json);
        if (app.got_subcommand(demo))
            return cmd_demo(demo_name, has_demo_degree
                                           ? std::optional<unsigned>(demo_degree_value)
                                           : std::nullopt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    std::cerr << "error: no subcommand selected\n";
    return kExitInputError;
}

}  // namespace lginv::cli
