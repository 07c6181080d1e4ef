#pragma once

#include "lginv/reversion.hpp"
#include "lginv/series.hpp"

#include <cstddef>
#include <map>

namespace lginv {

// Exact polynomial in the field components phi_1..phi_m. No truncation:
// degrees stay finite in every use (bounded by the moment order). Conjugate
// field factors never appear here; they are eliminated by the
// integration-by-parts rule (each one acts as d/dphi) before a value of this
// type is formed.
class PhiPolynomial {
public:
    using CoeffMap = std::map<MultiIndex, Rational, GradedLexLess>;

    explicit PhiPolynomial(std::size_t var_count);

    static PhiPolynomial constant(std::size_t var_count, Rational c);
    static PhiPolynomial monomial(std::size_t var_count, const MultiIndex& exponents, Rational c);
    // Reads the coefficients of a truncated series as a polynomial,
    // renaming x_j -> phi_j.
    static PhiPolynomial from_series(const TruncatedSeries& s);

    std::size_t var_count() const { return var_count_; }
    const CoeffMap& terms() const { return coeffs_; }

    Rational coeff(const MultiIndex& n) const;
    Rational constant_term() const { return coeff(MultiIndex(var_count_)); }
    bool is_zero() const { return coeffs_.empty(); }

    PhiPolynomial& operator+=(const PhiPolynomial& o);
    friend PhiPolynomial operator+(PhiPolynomial a, const PhiPolynomial& b) { return a += b; }
    friend PhiPolynomial operator*(const PhiPolynomial& a, const PhiPolynomial& b);
    PhiPolynomial pow(unsigned long e) const;

    PhiPolynomial derive(std::size_t var) const;

    bool operator==(const PhiPolynomial& o) const = default;

private:
    std::size_t var_count_;
    CoeffMap coeffs_;
};

// Moment of prod_i conj(phi_i)^{a_i} phi_i^{b_i} under the identity-covariance
// complex Gaussian: prod a_i! when a = b, zero otherwise.
Rational gaussian_pairing(const MultiIndex& a, const MultiIndex& b);

// Constant term of prod_b (d/dphi_b)^{n_b} applied to
// prod_a phi_a^{k_a} * prod_b g_b(phi)^{n_b} — the Gaussian integral of the
// source monomial against the expanded interaction, with every conjugate
// factor integrated by parts. Equals (prod n_i!) * [phi^n](phi^k prod g^n).
// Deliberately un-normalized: callers apply their own 1/k!, 1/n! factors.
Rational moment_term(const MultiIndex& k, const MultiIndex& n, const GSpec& spec);

// Z(x) = sum_{|n| <= D} (prod x_i^{n_i}/n_i!) * moment_term(0, n).
// Its reciprocal is the determinant of lg_matrix.
TruncatedSeries partition_series(const GSpec& spec);

enum class CorrelatorKind { unnormalized, normalized };

struct CorrelatorSeries {
    CorrelatorKind kind;
    MultiIndex k;  // source exponents
    TruncatedSeries value;
};

// sum_{|n| <= D} (prod x_i^{n_i}/n_i!) * moment_term(k, n) / prod k_a!
CorrelatorSeries unnormalized_moment(const MultiIndex& k, const GSpec& spec);

// unnormalized_moment(k) divided by the partition series. For k = e_i this
// reproduces the reversion solution f_i; the 1/k! normalization is retained
// for higher k.
CorrelatorSeries normalized_moment(const MultiIndex& k, const GSpec& spec);

}  // namespace lginv
