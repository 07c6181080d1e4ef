#include "lginv/wick.hpp"

#include <stdexcept>

namespace lginv {

PhiPolynomial::PhiPolynomial(std::size_t var_count) : var_count_(var_count) {
    if (var_count == 0) throw std::invalid_argument("polynomial needs at least one variable");
}

PhiPolynomial PhiPolynomial::constant(std::size_t var_count, Rational c) {
    PhiPolynomial p(var_count);
    if (!c.is_zero()) p.coeffs_.emplace(MultiIndex(var_count), std::move(c));
    return p;
}

PhiPolynomial PhiPolynomial::monomial(std::size_t var_count, const MultiIndex& exponents,
                                      Rational c) {
    if (exponents.size() != var_count)
        throw std::invalid_argument("multi-index length mismatch");
    PhiPolynomial p(var_count);
    if (!c.is_zero()) p.coeffs_.emplace(exponents, std::move(c));
    return p;
}

PhiPolynomial PhiPolynomial::from_series(const TruncatedSeries& s) {
    PhiPolynomial p(s.var_count());
    for (const auto& [e, c] : s.terms()) p.coeffs_.emplace(e, c);
    return p;
}

Rational PhiPolynomial::coeff(const MultiIndex& n) const {
    if (n.size() != var_count_) throw std::invalid_argument("multi-index length mismatch");
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

PhiPolynomial& PhiPolynomial::operator+=(const PhiPolynomial& o) {
    if (var_count_ != o.var_count_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.coeffs_) {
        auto [it, inserted] = coeffs_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

PhiPolynomial operator*(const PhiPolynomial& a, const PhiPolynomial& b) {
    if (a.var_count_ != b.var_count_) throw std::invalid_argument("variable count mismatch");
    PhiPolynomial out(a.var_count_);
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            MultiIndex e = ea + eb;
            auto [it, inserted] = out.coeffs_.emplace(std::move(e), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second.is_zero()) out.coeffs_.erase(it);
            }
        }
    return out;
}

PhiPolynomial PhiPolynomial::pow(unsigned long e) const {
    PhiPolynomial out = constant(var_count_, Rational(1));
    PhiPolynomial base = *this;
    while (e != 0) {
        if (e & 1) out = out * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return out;
}

PhiPolynomial PhiPolynomial::derive(std::size_t var) const {
    if (var >= var_count_) throw std::out_of_range("derivative variable index out of range");
    PhiPolynomial out(var_count_);
    for (const auto& [e, c] : coeffs_) {
        if (e[var] == 0) continue;
        MultiIndex shifted = e;
        shifted[var] -= 1;
        out.coeffs_.emplace(shifted, c * Rational(static_cast<long>(e[var])));
    }
    return out;
}

Rational gaussian_pairing(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) throw std::invalid_argument("multi-index length mismatch");
    if (!(a == b)) return Rational(0);
    return factorial_product(a);
}

Rational moment_term(const MultiIndex& k, const MultiIndex& n, const GSpec& spec) {
    std::size_t m = spec.var_count();
    if (k.size() != m || n.size() != m)
        throw std::invalid_argument("multi-index length mismatch");

    PhiPolynomial value = PhiPolynomial::monomial(m, k, Rational(1));
    for (std::size_t b = 0; b < m; ++b)
        if (n[b] > 0) value = value * PhiPolynomial::from_series(spec.g(b)).pow(n[b]);
    // each conjugate-field factor integrates by parts into one derivative
    for (std::size_t b = 0; b < m; ++b)
        for (unsigned t = 0; t < n[b]; ++t) value = value.derive(b);
    return value.constant_term();
}

TruncatedSeries partition_series(const GSpec& spec) {
    std::size_t m = spec.var_count();
    unsigned cap = spec.degree_cap();
    MultiIndex k_zero(m);
    TruncatedSeries z(m, cap);
    for (const MultiIndex& n : indices_up_to_degree(m, cap))
        z.set_coeff(n, moment_term(k_zero, n, spec) / factorial_product(n));
    return z;
}

CorrelatorSeries unnormalized_moment(const MultiIndex& k, const GSpec& spec) {
    std::size_t m = spec.var_count();
    unsigned cap = spec.degree_cap();
    if (k.size() != m) throw std::invalid_argument("multi-index length mismatch");

    Rational k_fact = factorial_product(k);
    TruncatedSeries value(m, cap);
    for (const MultiIndex& n : indices_up_to_degree(m, cap))
        value.set_coeff(n, moment_term(k, n, spec) / (factorial_product(n) * k_fact));
    return {CorrelatorKind::unnormalized, k, std::move(value)};
}

CorrelatorSeries normalized_moment(const MultiIndex& k, const GSpec& spec) {
    CorrelatorSeries u = unnormalized_moment(k, spec);
    TruncatedSeries value = u.value * partition_series(spec).invert_unit();
    return {CorrelatorKind::normalized, k, std::move(value)};
}

}  // namespace lginv
