#include "lginv/reversion.hpp"

#include <stdexcept>

namespace lginv {

Rational symmetric_tensor(const GSpec& spec, std::size_t i,
                          const std::vector<std::size_t>& alphas) {
    std::size_t m = spec.var_count();
    if (i >= m) throw std::out_of_range("component index out of range");
    if (alphas.size() > spec.degree_cap())
        throw std::out_of_range("tensor order exceeds truncation cap");
    MultiIndex e(m);
    for (std::size_t a : alphas) {
        if (a >= m) throw std::out_of_range("tensor slot index out of range");
        e[a] += 1;
    }
    return factorial_product(e) * spec.g(i).coeff(e);
}

TruncatedSeries gamma_tensor(const GSpec& spec, std::size_t i,
                             const std::vector<std::size_t>& alphas) {
    if (alphas.empty())
        throw std::invalid_argument("the reversion map has no order-0 coefficient");
    std::size_t m = spec.var_count();
    unsigned cap = spec.degree_cap();
    Rational w = symmetric_tensor(spec, i, alphas);
    TruncatedSeries out =
        TruncatedSeries::variable(m, cap, i) * (-w);  // -x_i * tensor
    if (alphas.size() == 1 && alphas[0] == i)
        out += TruncatedSeries::one(m, cap);  // the delta of the linear part
    return out;
}

SeriesVector gamma_apply(const GSpec& spec, const SeriesVector& h) {
    std::size_t m = spec.var_count();
    unsigned cap = spec.degree_cap();
    if (h.size() != m || h.var_count() != m || h.degree_cap() != cap)
        throw std::invalid_argument("series vector shape mismatch");
    if (!h.all_zero_constant_term())
        throw std::domain_error("the reversion map requires zero constant terms");

    std::vector<TruncatedSeries> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        TruncatedSeries xi = TruncatedSeries::variable(m, cap, i);
        out.push_back(h[i] - xi * spec.g(i).compose(h) +
                      xi * spec.constant_coefficient(i));
    }
    return SeriesVector(std::move(out));
}

ReversionProblem solve_fixed_point(const GSpec& spec) {
    std::size_t m = spec.var_count();
    unsigned cap = spec.degree_cap();

    SeriesVector f = SeriesVector::zero(m, cap);
    for (unsigned it = 1; it <= cap; ++it) {
        std::vector<TruncatedSeries> next;
        next.reserve(m);
        for (std::size_t i = 0; i < m; ++i)
            next.push_back(TruncatedSeries::variable(m, cap, i) * spec.g(i).compose(f));
        SeriesVector candidate(std::move(next));
        // one degree becomes final per pass
        for (std::size_t i = 0; i < m; ++i)
            if (!equal_up_to_degree(candidate[i], f[i], it - 1))
                throw std::logic_error("fixed-point iteration failed to stabilize");
        f = std::move(candidate);
    }

    std::vector<TruncatedSeries> y;
    y.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        y.push_back(TruncatedSeries::variable(m, cap, i) * spec.constant_coefficient(i));
    return ReversionProblem(spec, std::move(f), SeriesVector(std::move(y)));
}

SeriesMatrix jacobian(const GSpec& spec, const SeriesVector& at) {
    std::size_t m = spec.var_count();
    unsigned cap = spec.degree_cap();
    if (at.size() != m || at.var_count() != m || at.degree_cap() != cap)
        throw std::invalid_argument("series vector shape mismatch");
    if (!at.all_zero_constant_term())
        throw std::domain_error("jacobian evaluation requires zero constant terms");

    SeriesVector lifted = at.with_cap(cap + 1);
    SeriesMatrix out(m, cap);
    for (std::size_t i = 0; i < m; ++i) {
        TruncatedSeries gi = spec.g(i).with_cap(cap + 1);
        for (std::size_t j = 0; j < m; ++j)
            out(i, j) = gi.derive(j).compose(lifted).with_cap(cap);
    }
    return out;
}

SeriesMatrix lg_matrix(const ReversionProblem& prob) {
    const GSpec& spec = prob.spec();
    return SeriesMatrix::identity(spec.var_count(), spec.degree_cap()) -
           jacobian(spec, prob.f()).scaled_rows_by_vars();
}

Rational lhs_coeff(const GSpec& spec, const MultiIndex& k, const MultiIndex& n) {
    std::size_t m = spec.var_count();
    if (k.size() != m || n.size() != m)
        throw std::invalid_argument("multi-index length mismatch");
    if (n.degree() > spec.degree_cap())
        throw std::out_of_range("requested degree exceeds truncation cap");
    if (!n.dominates(k)) return Rational(0);

    TruncatedSeries prod = TruncatedSeries::one(m, spec.degree_cap());
    for (std::size_t i = 0; i < m; ++i)
        if (n[i] > 0) prod = prod * spec.g(i).pow(n[i]);
    return factorial_product(n) / factorial_product(k) * prod.coeff(n - k);
}

Rational rhs_coeff(const ReversionProblem& prob, const MultiIndex& k, const MultiIndex& n) {
    const GSpec& spec = prob.spec();
    std::size_t m = spec.var_count();
    if (k.size() != m || n.size() != m)
        throw std::invalid_argument("multi-index length mismatch");
    if (n.degree() > spec.degree_cap())
        throw std::out_of_range("requested degree exceeds truncation cap");

    TruncatedSeries value = det(lg_matrix(prob)).invert_unit();
    for (std::size_t i = 0; i < m; ++i)
        if (k[i] > 0) value = value * prob.f()[i].pow(k[i]);
    return value.coeff_factorial(n) / factorial_product(k);
}

VerificationReport verify_theorem(const GSpec& spec, const MultiIndex& k_max,
                                  unsigned n_degree_max) {
    std::size_t m = spec.var_count();
    unsigned cap = spec.degree_cap();
    if (k_max.size() != m) throw std::invalid_argument("k_max length mismatch");
    if (n_degree_max > cap)
        throw std::out_of_range("verification degree exceeds truncation cap");

    ReversionProblem prob = solve_fixed_point(spec);
    TruncatedSeries inv_det = det(lg_matrix(prob)).invert_unit();

    // power tables for both sides
    std::vector<std::vector<TruncatedSeries>> g_pow(m), f_pow(m);
    for (std::size_t i = 0; i < m; ++i) {
        g_pow[i].push_back(TruncatedSeries::one(m, cap));
        for (unsigned t = 1; t <= n_degree_max; ++t)
            g_pow[i].push_back(g_pow[i].back() * spec.g(i));
        f_pow[i].push_back(TruncatedSeries::one(m, cap));
        for (unsigned t = 1; t <= k_max[i]; ++t)
            f_pow[i].push_back(f_pow[i].back() * prob.f()[i]);
    }

    std::vector<MultiIndex> n_grid = indices_up_to_degree(m, n_degree_max);
    std::vector<TruncatedSeries> g_products;
    g_products.reserve(n_grid.size());
    for (const MultiIndex& n : n_grid) {
        TruncatedSeries prod = g_pow[0][n[0]];
        for (std::size_t i = 1; i < m; ++i) prod = prod * g_pow[i][n[i]];
        g_products.push_back(std::move(prod));
    }

    VerificationReport report;
    for (const MultiIndex& k : indices_in_box(k_max)) {
        TruncatedSeries rhs_series = inv_det;
        for (std::size_t i = 0; i < m; ++i)
            if (k[i] > 0) rhs_series = rhs_series * f_pow[i][k[i]];
        Rational k_fact = factorial_product(k);

        for (std::size_t ni = 0; ni < n_grid.size(); ++ni) {
            const MultiIndex& n = n_grid[ni];
            Rational lhs = n.dominates(k)
                               ? factorial_product(n) / k_fact * g_products[ni].coeff(n - k)
                               : Rational(0);
            Rational rhs = rhs_series.coeff_factorial(n) / k_fact;
            bool equal = lhs == rhs;
            if (!equal) report.pass = false;
            report.cells.push_back({k, n, std::move(lhs), std::move(rhs), equal});
        }
    }
    return report;
}

std::pair<Rational, Rational> macmahon_check(const std::vector<std::vector<Rational>>& A,
                                             const MultiIndex& n) {
    std::size_t m = A.size();
    if (m == 0) throw std::invalid_argument("empty matrix");
    for (const auto& row : A)
        if (row.size() != m) throw std::invalid_argument("matrix must be square");
    if (n.size() != m) throw std::invalid_argument("multi-index length mismatch");

    unsigned cap = std::max(n.degree(), 1u);
    std::vector<TruncatedSeries> g;
    g.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        TruncatedSeries row(m, cap);
        for (std::size_t j = 0; j < m; ++j)
            row.add_to_coeff(MultiIndex::unit(m, j), A[i][j]);
        g.push_back(std::move(row));
    }
    GSpec spec{SeriesVector(std::move(g))};
    MultiIndex k_zero(m);

    // the factorial normalizations on both sides cancel at equal n
    Rational n_fact = factorial_product(n);
    Rational lhs = lhs_coeff(spec, k_zero, n) / n_fact;
    Rational rhs = rhs_coeff(solve_fixed_point(spec), k_zero, n) / n_fact;
    return {lhs, rhs};
}

SeriesMatrix propagator_inverse(const GSpec& spec) {
    std::size_t m = spec.var_count();
    unsigned cap = spec.degree_cap();
    SeriesMatrix out = SeriesMatrix::identity(m, cap);
    for (std::size_t i = 0; i < m; ++i) {
        TruncatedSeries xi = TruncatedSeries::variable(m, cap, i);
        for (std::size_t j = 0; j < m; ++j) {
            Rational linear = spec.g(i).coeff(MultiIndex::unit(m, j));
            if (!linear.is_zero()) out(i, j) -= xi * linear;
        }
    }
    return out;
}

SeriesMatrix propagator(const GSpec& spec) {
    return invert_near_identity(propagator_inverse(spec));
}

SeriesMatrix interaction_jacobian(const GSpec& spec, const SeriesVector& at) {
    SeriesMatrix gamma_jac =
        SeriesMatrix::identity(spec.var_count(), spec.degree_cap()) -
        jacobian(spec, at).scaled_rows_by_vars();
    return propagator_inverse(spec) - gamma_jac;
}

}  // namespace lginv
