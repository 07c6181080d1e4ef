#include "lginv/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lginv {

MultiIndex MultiIndex::unit(std::size_t var_count, std::size_t var) {
    if (var >= var_count) throw std::out_of_range("variable index out of range");
    MultiIndex e(var_count);
    e[var] = 1;
    return e;
}

unsigned MultiIndex::degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0u);
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    if (size() != o.size()) throw std::invalid_argument("multi-index length mismatch");
    MultiIndex out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = e_[i] + o[i];
    return out;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
    if (size() != o.size()) throw std::invalid_argument("multi-index length mismatch");
    MultiIndex out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        if (e_[i] < o[i]) throw std::invalid_argument("negative entry in multi-index difference");
        out[i] = e_[i] - o[i];
    }
    return out;
}

bool MultiIndex::dominates(const MultiIndex& o) const {
    if (size() != o.size()) throw std::invalid_argument("multi-index length mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        if (e_[i] < o[i]) return false;
    return true;
}

std::string MultiIndex::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e_[i]);
    }
    s += ')';
    return s;
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
    return graded_lex_less(a, b);
}

Rational factorial_product(const MultiIndex& n) {
    Rational p(1);
    for (std::size_t i = 0; i < n.size(); ++i) p *= Rational::factorial(n[i]);
    return p;
}

namespace {

void enumerate_degrees(std::size_t var, unsigned remaining, MultiIndex& cur,
                       std::vector<MultiIndex>& out) {
    if (var + 1 == cur.size()) {
        for (unsigned e = 0; e <= remaining; ++e) {
            cur[var] = e;
            out.push_back(cur);
        }
        cur[var] = 0;
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        cur[var] = e;
        enumerate_degrees(var + 1, remaining - e, cur, out);
    }
    cur[var] = 0;
}

}  // namespace

std::vector<MultiIndex> indices_up_to_degree(std::size_t var_count, unsigned max_degree) {
    std::vector<MultiIndex> out;
    MultiIndex cur(var_count);
    if (var_count == 0) return {cur};
    enumerate_degrees(0, max_degree, cur, out);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

std::vector<MultiIndex> indices_in_box(const MultiIndex& bound) {
    std::vector<MultiIndex> out;
    MultiIndex cur(bound.size());
    std::size_t m = bound.size();
    if (m == 0) return {cur};
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= bound[i] + 1;
    out.reserve(total);
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < m && cur[i] == bound[i]) {
            cur[i] = 0;
            ++i;
        }
        if (i == m) break;
        ++cur[i];
    }
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

}  // namespace lginv
