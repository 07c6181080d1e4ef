#pragma once

#include "lginv/series.hpp"
#include "lginv/series_matrix.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace lginv {

// The problem data: a vector of series g_1..g_m in m variables at a working
// truncation cap D. Results derived from a GSpec are certified up to degree
// D; a GSpec built from polynomials of degree <= D carries them exactly.
// Constant terms g_i(0) may vanish (the reversion then degenerates to f = 0).
class GSpec {
public:
    explicit GSpec(SeriesVector g) : g_(std::move(g)) {}

    std::size_t var_count() const { return g_.var_count(); }
    unsigned degree_cap() const { return g_.degree_cap(); }
    const SeriesVector& g() const { return g_; }
    const TruncatedSeries& g(std::size_t i) const { return g_[i]; }

    // g_i(0), the order-zero tensor of g_i
    Rational constant_coefficient(std::size_t i) const { return g_[i].constant_term(); }

private:
    SeriesVector g_;
};

class ReversionProblem;
ReversionProblem solve_fixed_point(const GSpec& spec);

// A solved instance of f_i = x_i * g_i(f): holds the unique solution f with
// zero constant terms together with the right-hand-side data y_i = x_i*g_i(0).
class ReversionProblem {
public:
    const GSpec& spec() const { return spec_; }
    const SeriesVector& f() const { return f_; }
    const SeriesVector& y() const { return y_; }

private:
    friend ReversionProblem solve_fixed_point(const GSpec& spec);
    ReversionProblem(GSpec spec, SeriesVector f, SeriesVector y)
        : spec_(std::move(spec)), f_(std::move(f)), y_(std::move(y)) {}

    GSpec spec_;
    SeriesVector f_;
    SeriesVector y_;
};

// Fully symmetric tensor coefficient of g_i of order d = alphas.size():
// (prod_j e_j!) * [x^e] g_i where e counts the occurrences of each variable
// in alphas. Invariant under permutation of alphas.
Rational symmetric_tensor(const GSpec& spec, std::size_t i,
                          const std::vector<std::size_t>& alphas);

// Order-d coefficient of the reversion map as a series in x: for d = 1 it is
// delta_{i,alpha} - x_i * (linear tensor); for d >= 2 it is -x_i * (tensor).
// d = 0 is rejected: the map has no constant part.
TruncatedSeries gamma_tensor(const GSpec& spec, std::size_t i,
                             const std::vector<std::size_t>& alphas);

// The reversion map applied to h (entries with zero constant term):
// Gamma_i(h) = h_i - x_i * g_i(h) + x_i * g_i(0). Solving Gamma(f) = y is
// equivalent to f_i = x_i * g_i(f).
SeriesVector gamma_apply(const GSpec& spec, const SeriesVector& h);

// Jacobian matrix (dg_i/dx_j)(at). Work happens one degree above the cap so
// the derivative loses nothing representable; for polynomial data the result
// is exact at the cap.
SeriesMatrix jacobian(const GSpec& spec, const SeriesVector& at);

// The matrix I - diag(x) * jacobian(g, f) whose determinant is the
// denominator of the inversion identity. Its determinant has constant
// term exactly 1.
SeriesMatrix lg_matrix(const ReversionProblem& prob);

// Coefficient of prod x_i^{n_i}/n_i! in prod x_i^{k_i}/k_i! * prod g_i^{n_i},
// i.e. (prod n_i!/k_i!) * [x^{n-k}] prod g_i^{n_i}; zero when n does not
// dominate k componentwise.
Rational lhs_coeff(const GSpec& spec, const MultiIndex& k, const MultiIndex& n);

// Coefficient of prod x_i^{n_i}/n_i! in prod f_i^{k_i}/k_i! times the
// inverse determinant of lg_matrix.
Rational rhs_coeff(const ReversionProblem& prob, const MultiIndex& k, const MultiIndex& n);

struct VerificationCell {
    MultiIndex k;
    MultiIndex n;
    Rational lhs;
    Rational rhs;
    bool equal;
};

struct VerificationReport {
    bool pass = true;
    std::vector<VerificationCell> cells;
};

// Compares both sides of the inversion identity for every k <= k_max
// componentwise and every |n| <= n_degree_max, in graded-lex order over k
// then n. Mismatches are recorded, not thrown.
VerificationReport verify_theorem(const GSpec& spec, const MultiIndex& k_max,
                                  unsigned n_degree_max);

// Linear special case (master theorem): returns the pair
//   ( [x^n] prod_i (sum_j A_ij x_j)^{n_i} , [x^n] 1/det(I - diag(x) A) ).
// The two agree; both are computed through the general machinery with k = 0.
std::pair<Rational, Rational> macmahon_check(const std::vector<std::vector<Rational>>& A,
                                             const MultiIndex& n);

// The quadratic-form matrix delta_ij - x_i * (linear tensor of g_i); its
// inverse is the propagator.
SeriesMatrix propagator_inverse(const GSpec& spec);

// Inverse of propagator_inverse over the series ring.
SeriesMatrix propagator(const GSpec& spec);

// Jacobian of the degree >= 2 interaction part, computed as
// propagator_inverse - (I - diag(x) * jacobian(g, at)).
SeriesMatrix interaction_jacobian(const GSpec& spec, const SeriesVector& at);

}  // namespace lginv
