#include "lginv/reversion.hpp"

#include <doctest.h>

#include <stdexcept>

#include "test_support.hpp"

using lginv::GSpec;
using lginv::MultiIndex;
using lginv::Rational;
using lginv::ReversionProblem;
using lginv::SeriesMatrix;
using lginv::SeriesVector;
using lginv::TruncatedSeries;
using lginv::VerificationReport;
using lginv::testing::random_series;

namespace {

GSpec constant_ones_spec(std::size_t m, unsigned cap) {
    std::vector<TruncatedSeries> g(m, TruncatedSeries::one(m, cap));
    return GSpec{SeriesVector(std::move(g))};
}

// g = 1/(1-x) as an exact truncation: all coefficients 1
GSpec geometric_spec(unsigned cap) {
    TruncatedSeries g(1, cap);
    for (unsigned d = 0; d <= cap; ++d) g.set_coeff(MultiIndex{d}, Rational(1));
    return GSpec{SeriesVector({g})};
}

GSpec one_plus_x_spec(unsigned cap) {
    TruncatedSeries g = TruncatedSeries::one(1, cap);
    g.add_to_coeff(MultiIndex{1}, Rational(1));
    return GSpec{SeriesVector({g})};
}

GSpec random_spec(std::mt19937_64& rng, std::size_t m, unsigned cap,
                  int support_degree = 2) {
    std::vector<TruncatedSeries> g;
    for (std::size_t i = 0; i < m; ++i)
        g.push_back(random_series(rng, m, cap, support_degree));
    return GSpec{SeriesVector(std::move(g))};
}

// oracle: Catalan numbers by the convolution recurrence
std::vector<Rational> catalan_oracle(std::size_t count) {
    std::vector<Rational> c{Rational(1)};
    while (c.size() < count) {
        Rational next(0);
        for (std::size_t i = 0; i < c.size(); ++i) next += c[i] * c[c.size() - 1 - i];
        c.push_back(next);
    }
    return c;
}

// oracle: [x^j] (1-x)^{-r} = C(j+r-1, r-1)
Rational negative_binomial_oracle(unsigned j, unsigned r) {
    return Rational::factorial(j + r - 1) /
           (Rational::factorial(j) * Rational::factorial(r - 1));
}

}  // namespace

TEST_CASE("symmetric tensors") {
    // g_1 = x1*x2 over m=2
    TruncatedSeries g1 = TruncatedSeries::monomial(2, 4, MultiIndex{1, 1}, Rational(1));
    GSpec spec{SeriesVector({g1, TruncatedSeries(2, 4)})};
    CHECK(symmetric_tensor(spec, 0, {0, 1}) == Rational(1));
    CHECK(symmetric_tensor(spec, 0, {1, 0}) == Rational(1));

    // g_1 = x1^2/2: the order-2 tensor is 2! * (1/2) = 1
    GSpec half{SeriesVector({TruncatedSeries::monomial(1, 4, MultiIndex{2}, Rational(1, 2))})};
    CHECK(symmetric_tensor(half, 0, {0, 0}) == Rational(1));

    GSpec five{SeriesVector({TruncatedSeries::constant(1, 4, Rational(5))})};
    CHECK(symmetric_tensor(five, 0, {}) == Rational(5));

    CHECK_THROWS_AS(symmetric_tensor(five, 1, {}), std::out_of_range);
    CHECK_THROWS_AS(symmetric_tensor(five, 0, {0, 0, 0, 0, 0}), std::out_of_range);
}

TEST_CASE("reversion map tensors") {
    const unsigned cap = 4;
    GSpec ones = constant_ones_spec(1, cap);
    CHECK(gamma_tensor(ones, 0, {0}) == TruncatedSeries::one(1, cap));

    GSpec affine = one_plus_x_spec(cap);
    CHECK(gamma_tensor(affine, 0, {0}) ==
          TruncatedSeries::one(1, cap) - TruncatedSeries::variable(1, cap, 0));

    GSpec quad{SeriesVector({TruncatedSeries::one(1, cap) +
                             TruncatedSeries::monomial(1, cap, MultiIndex{2}, Rational(1, 2))})};
    CHECK(gamma_tensor(quad, 0, {0, 0}) == -TruncatedSeries::variable(1, cap, 0));

    CHECK_THROWS_AS(gamma_tensor(quad, 0, {}), std::invalid_argument);
}

TEST_CASE("reversion map evaluation") {
    const unsigned cap = 4;
    GSpec ones = constant_ones_spec(1, cap);
    CHECK(gamma_apply(ones, SeriesVector::zero(1, cap)) == SeriesVector::zero(1, cap));
    CHECK(gamma_apply(ones, SeriesVector::variables(1, cap)) ==
          SeriesVector::variables(1, cap));

    // solving first, then applying the map, lands exactly on y
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 8; ++trial) {
        GSpec spec = random_spec(rng, 1 + trial % 3, 4);
        ReversionProblem prob = solve_fixed_point(spec);
        CHECK(gamma_apply(spec, prob.f()) == prob.y());
    }

    CHECK_THROWS_AS(gamma_apply(ones, SeriesVector({TruncatedSeries::one(1, cap)})),
                    std::domain_error);
}

TEST_CASE("fixed-point solve: forced and classic solutions") {
    const unsigned cap = 5;
    GSpec ones = constant_ones_spec(2, cap);
    ReversionProblem prob = solve_fixed_point(ones);
    CHECK(prob.f() == SeriesVector::variables(2, cap));

    // g = 1 + x: f = x/(1-x), all coefficients 1 from degree 1 on
    ReversionProblem affine = solve_fixed_point(one_plus_x_spec(cap));
    for (unsigned d = 1; d <= cap; ++d)
        CHECK(affine.f()[0].coeff(MultiIndex{d}) == Rational(1));
    CHECK(affine.f()[0].constant_term().is_zero());

    // g = 1/(1-x): shifted Catalan numbers
    ReversionProblem catalan = solve_fixed_point(geometric_spec(cap));
    std::vector<Rational> expect = catalan_oracle(cap);
    for (unsigned d = 1; d <= cap; ++d)
        CHECK(catalan.f()[0].coeff(MultiIndex{d}) == expect[d - 1]);
    CHECK(catalan.f()[0].coeff(MultiIndex{5}) == Rational(14));
}

TEST_CASE("jacobian") {
    const unsigned cap = 4;
    GSpec ones = constant_ones_spec(2, cap);
    SeriesMatrix j = jacobian(ones, SeriesVector::zero(2, cap));
    CHECK(j == SeriesMatrix(2, cap));

    ReversionProblem affine = solve_fixed_point(one_plus_x_spec(cap));
    SeriesMatrix ja = jacobian(affine.spec(), affine.f());
    CHECK(ja(0, 0) == TruncatedSeries::one(1, cap));

    // m=2, g1 = x2, g2 = x1 evaluated at zero: off-diagonal ones
    GSpec swap{SeriesVector({TruncatedSeries::variable(2, cap, 1),
                             TruncatedSeries::variable(2, cap, 0)})};
    SeriesMatrix js = jacobian(swap, SeriesVector::zero(2, cap));
    CHECK(js(0, 0).is_zero());
    CHECK(js(0, 1) == TruncatedSeries::one(2, cap));
    CHECK(js(1, 0) == TruncatedSeries::one(2, cap));
    CHECK(js(1, 1).is_zero());
}

TEST_CASE("identity denominator matrix") {
    const unsigned cap = 4;
    ReversionProblem ones = solve_fixed_point(constant_ones_spec(2, cap));
    CHECK(lg_matrix(ones) == SeriesMatrix::identity(2, cap));

    ReversionProblem affine = solve_fixed_point(one_plus_x_spec(cap));
    CHECK(lg_matrix(affine)(0, 0) ==
          TruncatedSeries::one(1, cap) - TruncatedSeries::variable(1, cap, 0));

    // all-ones linear system has the constant jacobian, so the matrix is
    // I - diag(x) * ones
    std::vector<TruncatedSeries> g;
    g.push_back(TruncatedSeries::variable(2, cap, 0) + TruncatedSeries::variable(2, cap, 1));
    g.push_back(g[0]);
    ReversionProblem macmahon = solve_fixed_point(GSpec{SeriesVector(std::move(g))});
    SeriesMatrix lg = lg_matrix(macmahon);
    TruncatedSeries x1 = TruncatedSeries::variable(2, cap, 0);
    TruncatedSeries x2 = TruncatedSeries::variable(2, cap, 1);
    CHECK(lg(0, 0) == TruncatedSeries::one(2, cap) - x1);
    CHECK(lg(0, 1) == -x1);
    CHECK(lg(1, 0) == -x2);
    CHECK(lg(1, 1) == TruncatedSeries::one(2, cap) - x2);

    // the determinant always starts at exactly 1
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 6; ++trial) {
        ReversionProblem prob = solve_fixed_point(random_spec(rng, 1 + trial % 3, 4));
        CHECK(det(lg_matrix(prob)).constant_term() == Rational(1));
    }
}

TEST_CASE("lhs coefficients") {
    const unsigned cap = 5;
    GSpec ones = constant_ones_spec(2, cap);
    CHECK(lhs_coeff(ones, MultiIndex{1, 0}, MultiIndex{1, 0}) == Rational(1));
    CHECK(lhs_coeff(ones, MultiIndex{1, 0}, MultiIndex{2, 0}).is_zero());
    CHECK(lhs_coeff(ones, MultiIndex{2, 1}, MultiIndex{1, 0}).is_zero());  // n below k

    // all-ones linear case: coefficient of x1*x2 in (x1+x2)^2 is 2
    std::vector<TruncatedSeries> g;
    g.push_back(TruncatedSeries::variable(2, cap, 0) + TruncatedSeries::variable(2, cap, 1));
    g.push_back(g[0]);
    GSpec linear{SeriesVector(std::move(g))};
    CHECK(lhs_coeff(linear, MultiIndex{0, 0}, MultiIndex{1, 1}) == Rational(2));

    // m=1, g=1/(1-x), k=1, n=3: (3!/1!) * [x^2] (1-x)^{-3} = 6 * 6 = 36
    GSpec geom = geometric_spec(cap);
    CHECK(negative_binomial_oracle(2, 3) == Rational(6));
    CHECK(lhs_coeff(geom, MultiIndex{1}, MultiIndex{3}) ==
          Rational(6) * negative_binomial_oracle(2, 3));

    CHECK_THROWS_AS(lhs_coeff(geom, MultiIndex{0}, MultiIndex{6}), std::out_of_range);
}

TEST_CASE("rhs coefficients") {
    const unsigned cap = 5;
    ReversionProblem ones = solve_fixed_point(constant_ones_spec(2, cap));
    CHECK(rhs_coeff(ones, MultiIndex{1, 0}, MultiIndex{1, 0}) == Rational(1));
    CHECK(rhs_coeff(ones, MultiIndex{1, 0}, MultiIndex{2, 0}).is_zero());

    std::vector<TruncatedSeries> g;
    g.push_back(TruncatedSeries::variable(2, cap, 0) + TruncatedSeries::variable(2, cap, 1));
    g.push_back(g[0]);
    ReversionProblem linear = solve_fixed_point(GSpec{SeriesVector(std::move(g))});
    CHECK(rhs_coeff(linear, MultiIndex{0, 0}, MultiIndex{1, 1}) == Rational(2));

    ReversionProblem geom = solve_fixed_point(geometric_spec(cap));
    CHECK(rhs_coeff(geom, MultiIndex{1}, MultiIndex{3}) == Rational(36));
    CHECK(rhs_coeff(geom, MultiIndex{1}, MultiIndex{3}) ==
          lhs_coeff(geom.spec(), MultiIndex{1}, MultiIndex{3}));
}

TEST_CASE("full verification on random data") {
    GSpec ones = constant_ones_spec(2, 4);
    VerificationReport trivial = verify_theorem(ones, MultiIndex{2, 2}, 4);
    CHECK(trivial.pass);
    CHECK(!trivial.cells.empty());

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 3; ++trial) {
        std::size_t m = 1 + trial % 3;
        GSpec spec = random_spec(rng, m, 5);
        MultiIndex k_max(m);
        for (std::size_t i = 0; i < m; ++i) k_max[i] = 2;
        VerificationReport report = verify_theorem(spec, k_max, 5);
        CHECK(report.pass);
    }
}

TEST_CASE("verification report is deterministic graded-lex") {
    GSpec spec = one_plus_x_spec(3);
    VerificationReport report = verify_theorem(spec, MultiIndex{1}, 2);
    REQUIRE(report.cells.size() == 6);
    CHECK(report.cells[0].k == MultiIndex{0});
    CHECK(report.cells[0].n == MultiIndex{0});
    CHECK(report.cells[1].n == MultiIndex{1});
    CHECK(report.cells[3].k == MultiIndex{1});
}

TEST_CASE("degenerate data with vanishing constant terms") {
    const unsigned cap = 4;
    std::vector<TruncatedSeries> g;
    g.push_back(TruncatedSeries::variable(2, cap, 0) +
                TruncatedSeries::monomial(2, cap, MultiIndex{0, 2}, Rational(1, 2)));
    g.push_back(TruncatedSeries::variable(2, cap, 1));
    GSpec spec{SeriesVector(std::move(g))};

    ReversionProblem prob = solve_fixed_point(spec);
    CHECK(prob.f() == SeriesVector::zero(2, cap));
    CHECK(prob.y() == SeriesVector::zero(2, cap));

    VerificationReport report = verify_theorem(spec, MultiIndex{2, 2}, cap);
    CHECK(report.pass);

    // the right side can only be nonzero at k = 0
    for (const auto& cell : report.cells)
        if (cell.k.degree() > 0) CHECK(cell.rhs.is_zero());
}

TEST_CASE("master theorem special case") {
    auto ident = std::vector<std::vector<Rational>>{{Rational(1), Rational(0)},
                                                    {Rational(0), Rational(1)}};
    auto [l1, r1] = macmahon_check(ident, MultiIndex{2, 1});
    CHECK(l1 == Rational(1));
    CHECK(r1 == Rational(1));

    auto ones = std::vector<std::vector<Rational>>{{Rational(1), Rational(1)},
                                                   {Rational(1), Rational(1)}};
    auto [l2, r2] = macmahon_check(ones, MultiIndex{1, 1});
    CHECK(l2 == Rational(2));
    CHECK(r2 == Rational(2));

    auto swap = std::vector<std::vector<Rational>>{{Rational(0), Rational(1)},
                                                   {Rational(1), Rational(0)}};
    auto [l3, r3] = macmahon_check(swap, MultiIndex{1, 1});
    CHECK(l3 == Rational(1));
    CHECK(r3 == Rational(1));

    std::mt19937_64 rng(24);
    std::uniform_int_distribution<long> entry(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t m = 2 + trial % 2;
        std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m, Rational(0)));
        for (auto& row : a)
            for (auto& v : row) v = Rational(entry(rng));
        for (const MultiIndex& n : lginv::indices_up_to_degree(m, 4)) {
            auto [lhs, rhs] = macmahon_check(a, n);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("propagator split") {
    const unsigned cap = 4;
    GSpec ones = constant_ones_spec(2, cap);
    CHECK(propagator(ones) == SeriesMatrix::identity(2, cap));

    // m=1 with unit linear tensor: C = 1/(1-x1)
    GSpec affine = one_plus_x_spec(cap);
    SeriesMatrix c = propagator(affine);
    CHECK(c(0, 0) == (TruncatedSeries::one(1, cap) -
                      TruncatedSeries::variable(1, cap, 0)).invert_unit());

    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 6; ++trial) {
        std::size_t m = 1 + trial % 3;
        GSpec spec = random_spec(rng, m, cap);
        CHECK(propagator_inverse(spec) * propagator(spec) ==
              SeriesMatrix::identity(m, cap));
    }
}

TEST_CASE("interaction jacobian") {
    const unsigned cap = 4;
    // purely linear data has no interaction part
    std::vector<TruncatedSeries> g;
    g.push_back(TruncatedSeries::variable(2, cap, 0) * Rational(2));
    g.push_back(TruncatedSeries::variable(2, cap, 0) +
                TruncatedSeries::variable(2, cap, 1));
    GSpec linear{SeriesVector(std::move(g))};
    ReversionProblem lp = solve_fixed_point(linear);
    CHECK(interaction_jacobian(linear, lp.f()) == SeriesMatrix(2, cap));

    // m=1, g = 1 + x^2/2: the interaction jacobian at f is x1*f
    GSpec quad{SeriesVector({TruncatedSeries::one(1, cap) +
                             TruncatedSeries::monomial(1, cap, MultiIndex{2}, Rational(1, 2))})};
    ReversionProblem qp = solve_fixed_point(quad);
    SeriesMatrix dh = interaction_jacobian(quad, qp.f());
    CHECK(dh(0, 0) == TruncatedSeries::variable(1, cap, 0) * qp.f()[0]);

    // defining identity: (quadratic part) - (interaction jacobian) equals the
    // jacobian of the reversion map
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 6; ++trial) {
        std::size_t m = 1 + trial % 3;
        GSpec spec = random_spec(rng, m, cap);
        ReversionProblem prob = solve_fixed_point(spec);
        SeriesMatrix gamma_jac = SeriesMatrix::identity(m, cap) -
                                 jacobian(spec, prob.f()).scaled_rows_by_vars();
        CHECK(propagator_inverse(spec) - interaction_jacobian(spec, prob.f()) == gamma_jac);
        CHECK(lg_matrix(prob) == gamma_jac);
    }
}

TEST_CASE("trace-log of the inverse determinant") {
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 6; ++trial) {
        std::size_t m = 1 + trial % 3;
        unsigned cap = 4;
        GSpec spec = random_spec(rng, m, cap);
        ReversionProblem prob = solve_fixed_point(spec);
        SeriesMatrix n = jacobian(spec, prob.f()).scaled_rows_by_vars();

        TruncatedSeries lhs = det(lg_matrix(prob)).invert_unit().log();
        TruncatedSeries rhs(m, cap);
        SeriesMatrix power = n;
        for (unsigned k = 1; k <= cap; ++k) {
            rhs += power.trace() / Rational(static_cast<long>(k));
            if (k < cap) power = power * n;
        }
        CHECK(lhs == rhs);
    }
}
