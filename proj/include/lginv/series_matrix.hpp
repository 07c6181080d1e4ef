#pragma once

#include "lginv/series.hpp"

#include <cstddef>
#include <vector>

namespace lginv {

// Square matrix of truncated series; the dimension equals the variable count
// of the entries and all entries share one truncation cap.
class SeriesMatrix {
public:
    SeriesMatrix(std::size_t dim, unsigned degree_cap);  // zero matrix

    static SeriesMatrix identity(std::size_t dim, unsigned degree_cap);

    std::size_t dim() const { return dim_; }
    unsigned degree_cap() const { return degree_cap_; }

    const TruncatedSeries& operator()(std::size_t i, std::size_t j) const;
    TruncatedSeries& operator()(std::size_t i, std::size_t j);

    SeriesMatrix& operator+=(const SeriesMatrix& o);
    SeriesMatrix& operator-=(const SeriesMatrix& o);
    friend SeriesMatrix operator+(SeriesMatrix a, const SeriesMatrix& b) { return a += b; }
    friend SeriesMatrix operator-(SeriesMatrix a, const SeriesMatrix& b) { return a -= b; }
    friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);

    TruncatedSeries trace() const;

    // diag(x) * M: row i multiplied by the variable x_i.
    SeriesMatrix scaled_rows_by_vars() const;

    bool operator==(const SeriesMatrix& o) const;

private:
    void require_same_shape(const SeriesMatrix& o) const;

    std::size_t dim_;
    unsigned degree_cap_;
    std::vector<TruncatedSeries> entries_;  // row-major
};

// Determinant over the truncated series ring, computed by division-free
// cofactor expansion (memoized over column subsets). The series ring has
// zero divisors at the truncation boundary, so elimination is not an option;
// expansion is exact at every represented degree. dim above `size_limit`
// is rejected.
TruncatedSeries det(const SeriesMatrix& mat, std::size_t size_limit = 8);

// Inverse of a matrix whose constant-term part is the identity, via the
// Neumann sum of powers of (I - M). Throws if the constant part differs
// from the identity.
SeriesMatrix invert_near_identity(const SeriesMatrix& mat);

}  // namespace lginv
