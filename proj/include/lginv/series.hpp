#pragma once

#include "lginv/multi_index.hpp"
#include "lginv/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace lginv {

class SeriesVector;

// Multivariate formal power series over Q, truncated at a fixed total degree.
// Every operation discards terms of total degree above the cap, so a value of
// degree cap D represents its series exactly modulo terms of degree > D.
// Zero coefficients are never stored; term iteration is graded-lex.
//
// Note on derivatives: differentiating a series that is only known to degree
// D yields a result whose degree-D coefficients cannot be trusted unless the
// input was exact there (e.g. a polynomial). Callers that need a derivative
// exact at the cap lift the inputs one degree first (see jacobian()).
class TruncatedSeries {
public:
    using CoeffMap = std::map<MultiIndex, Rational, GradedLexLess>;

    TruncatedSeries(std::size_t var_count, unsigned degree_cap);

    static TruncatedSeries constant(std::size_t var_count, unsigned degree_cap, Rational c);
    static TruncatedSeries one(std::size_t var_count, unsigned degree_cap);
    static TruncatedSeries variable(std::size_t var_count, unsigned degree_cap, std::size_t var);
    static TruncatedSeries monomial(std::size_t var_count, unsigned degree_cap,
                                    const MultiIndex& exponents, Rational c);

    std::size_t var_count() const { return var_count_; }
    unsigned degree_cap() const { return degree_cap_; }
    const CoeffMap& terms() const { return coeffs_; }

    // Raw coefficient of x^n. Absent keys are zero; |n| > cap is an error
    // because that coefficient is not represented at this truncation.
    Rational coeff(const MultiIndex& n) const;
    // Coefficient of prod_i x_i^{n_i}/n_i!, i.e. (prod n_i!) * coeff(n).
    Rational coeff_factorial(const MultiIndex& n) const;
    Rational constant_term() const;

    void set_coeff(const MultiIndex& n, const Rational& c);
    void add_to_coeff(const MultiIndex& n, const Rational& c);

    bool is_zero() const { return coeffs_.empty(); }

    // Same coefficients under a new truncation cap; lowering the cap drops
    // the terms above it.
    TruncatedSeries with_cap(unsigned new_cap) const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c);
    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) { return a * c; }
    friend TruncatedSeries operator/(const TruncatedSeries& a, const Rational& c);

    TruncatedSeries pow(unsigned long e) const;

    // Formal partial derivative with respect to variable `var` (0-based).
    TruncatedSeries derive(std::size_t var) const;

    // Substitutes inner[j] for x_j. Every inner entry must have zero constant
    // term so that only finitely many terms contribute per output degree.
    TruncatedSeries compose(const SeriesVector& inner) const;

    // Multiplicative inverse of a series with nonzero constant term c,
    // via the geometric expansion (1/c) * sum_{k<=cap} (1 - a/c)^k.
    TruncatedSeries invert_unit() const;

    // sum_{k<=cap} a^k/k!; requires zero constant term.
    TruncatedSeries exp() const;

    // -sum_{1<=k<=cap} (1-a)^k/k; requires constant term exactly 1.
    TruncatedSeries log() const;

    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    std::string str() const;

private:
    void require_same_shape(const TruncatedSeries& o) const;
    void prune_zeros();

    std::size_t var_count_;
    unsigned degree_cap_;
    CoeffMap coeffs_;
};

// True when a and b agree on every coefficient of total degree <= max_degree.
bool equal_up_to_degree(const TruncatedSeries& a, const TruncatedSeries& b, unsigned max_degree);

// Length-m vector of series sharing the same variable count m and cap.
class SeriesVector {
public:
    explicit SeriesVector(std::vector<TruncatedSeries> entries);

    static SeriesVector zero(std::size_t var_count, unsigned degree_cap);
    // (x_1, ..., x_m): the identity substitution
    static SeriesVector variables(std::size_t var_count, unsigned degree_cap);

    std::size_t size() const { return entries_.size(); }
    std::size_t var_count() const;
    unsigned degree_cap() const;

    const TruncatedSeries& operator[](std::size_t i) const { return entries_[i]; }
    TruncatedSeries& operator[](std::size_t i) { return entries_[i]; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool all_zero_constant_term() const;
    SeriesVector with_cap(unsigned new_cap) const;

    bool operator==(const SeriesVector& o) const { return entries_ == o.entries_; }

private:
    std::vector<TruncatedSeries> entries_;
};

}  // namespace lginv
