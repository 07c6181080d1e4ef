#pragma once

#include "lginv/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace lginv {

// Exponent tuple of a monomial in a fixed number of variables.
// All variable indices in the library are 0-based; the CLI surface maps
// between these and the 1-based names x1..xm.
class MultiIndex {
public:
    explicit MultiIndex(std::size_t var_count) : e_(var_count, 0) {}
    MultiIndex(std::initializer_list<unsigned> e) : e_(e) {}
    explicit MultiIndex(std::vector<unsigned> e) : e_(std::move(e)) {}

    static MultiIndex unit(std::size_t var_count, std::size_t var);

    std::size_t size() const { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    unsigned& operator[](std::size_t i) { return e_[i]; }

    // total degree
    unsigned degree() const;

    MultiIndex operator+(const MultiIndex& o) const;
    // componentwise difference; requires dominates(o)
    MultiIndex operator-(const MultiIndex& o) const;
    // componentwise >=
    bool dominates(const MultiIndex& o) const;

    bool operator==(const MultiIndex& o) const = default;

    std::string str() const;  // "(1,0,2)"

private:
    std::vector<unsigned> e_;
};

// Canonical term order: total degree first, ties broken by lexicographic
// comparison of the exponent tuples. Used for every map, loop and output.
struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

// prod_i n_i!
Rational factorial_product(const MultiIndex& n);

// All multi-indices with total degree <= max_degree, graded-lex order.
std::vector<MultiIndex> indices_up_to_degree(std::size_t var_count, unsigned max_degree);

// All multi-indices k with k <= bound componentwise, graded-lex order.
std::vector<MultiIndex> indices_in_box(const MultiIndex& bound);

}  // namespace lginv
