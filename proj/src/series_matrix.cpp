#include "lginv/series_matrix.hpp"

#include <bit>
#include <optional>
#include <stdexcept>

namespace lginv {

SeriesMatrix::SeriesMatrix(std::size_t dim, unsigned degree_cap)
    : dim_(dim),
      degree_cap_(degree_cap),
      entries_(dim * dim, TruncatedSeries(dim == 0 ? 1 : dim, degree_cap)) {
    if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
}

SeriesMatrix SeriesMatrix::identity(std::size_t dim, unsigned degree_cap) {
    SeriesMatrix m(dim, degree_cap);
    for (std::size_t i = 0; i < dim; ++i)
        m(i, i) = TruncatedSeries::one(dim, degree_cap);
    return m;
}

const TruncatedSeries& SeriesMatrix::operator()(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) throw std::out_of_range("matrix index out of range");
    return entries_[i * dim_ + j];
}

TruncatedSeries& SeriesMatrix::operator()(std::size_t i, std::size_t j) {
    if (i >= dim_ || j >= dim_) throw std::out_of_range("matrix index out of range");
    return entries_[i * dim_ + j];
}

void SeriesMatrix::require_same_shape(const SeriesMatrix& o) const {
    if (dim_ != o.dim_ || degree_cap_ != o.degree_cap_)
        throw std::invalid_argument("matrix shape mismatch");
}

SeriesMatrix& SeriesMatrix::operator+=(const SeriesMatrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

SeriesMatrix& SeriesMatrix::operator-=(const SeriesMatrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
    a.require_same_shape(b);
    SeriesMatrix out(a.dim_, a.degree_cap_);
    for (std::size_t i = 0; i < a.dim_; ++i)
        for (std::size_t j = 0; j < a.dim_; ++j) {
            TruncatedSeries acc(a.dim_, a.degree_cap_);
            for (std::size_t k = 0; k < a.dim_; ++k) acc += a(i, k) * b(k, j);
            out(i, j) = std::move(acc);
        }
    return out;
}

TruncatedSeries SeriesMatrix::trace() const {
    TruncatedSeries acc(dim_, degree_cap_);
    for (std::size_t i = 0; i < dim_; ++i) acc += (*this)(i, i);
    return acc;
}

SeriesMatrix SeriesMatrix::scaled_rows_by_vars() const {
    SeriesMatrix out(dim_, degree_cap_);
    for (std::size_t i = 0; i < dim_; ++i) {
        TruncatedSeries xi = TruncatedSeries::variable(dim_, degree_cap_, i);
        for (std::size_t j = 0; j < dim_; ++j) out(i, j) = xi * (*this)(i, j);
    }
    return out;
}

bool SeriesMatrix::operator==(const SeriesMatrix& o) const {
    return dim_ == o.dim_ && degree_cap_ == o.degree_cap_ && entries_ == o.entries_;
}

TruncatedSeries det(const SeriesMatrix& mat, std::size_t size_limit) {
    std::size_t m = mat.dim();
    if (m > size_limit)
        throw std::invalid_argument("determinant size limit exceeded");

    // minor over column set S uses rows m-|S| .. m-1
    std::vector<std::optional<TruncatedSeries>> memo(std::size_t(1) << m);
    auto solve = [&](auto&& self, unsigned cols) -> const TruncatedSeries& {
        auto& slot = memo[cols];
        if (slot) return *slot;
        if (cols == 0) {
            slot = TruncatedSeries::one(m, mat.degree_cap());
            return *slot;
        }
        std::size_t row = m - static_cast<std::size_t>(std::popcount(cols));
        TruncatedSeries acc(m, mat.degree_cap());
        bool positive = true;
        for (std::size_t j = 0; j < m; ++j) {
            if (!(cols & (1u << j))) continue;
            const TruncatedSeries& sub = self(self, cols & ~(1u << j));
            TruncatedSeries contrib = mat(row, j) * sub;
            if (positive)
                acc += contrib;
            else
                acc -= contrib;
            positive = !positive;
        }
        slot = std::move(acc);
        return *slot;
    };
    unsigned full = static_cast<unsigned>((std::size_t(1) << m) - 1);
    return solve(solve, full);
}

SeriesMatrix invert_near_identity(const SeriesMatrix& mat) {
    std::size_t m = mat.dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Rational c = mat(i, j).constant_term();
            if (c != Rational(i == j ? 1 : 0))
                throw std::domain_error("matrix inverse requires identity constant part");
        }
    SeriesMatrix identity = SeriesMatrix::identity(m, mat.degree_cap());
    SeriesMatrix tail = identity - mat;  // entries with zero constant term
    SeriesMatrix acc = identity;
    for (unsigned k = 0; k < mat.degree_cap(); ++k) acc = identity + tail * acc;
    return acc;
}

}  // namespace lginv
