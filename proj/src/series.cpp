#include "lginv/series.hpp"

#include <stdexcept>
#include <utility>

namespace lginv {

TruncatedSeries::TruncatedSeries(std::size_t var_count, unsigned degree_cap)
    : var_count_(var_count), degree_cap_(degree_cap) {
    if (var_count == 0) throw std::invalid_argument("series needs at least one variable");
}

TruncatedSeries TruncatedSeries::constant(std::size_t var_count, unsigned degree_cap, Rational c) {
    TruncatedSeries s(var_count, degree_cap);
    if (!c.is_zero()) s.coeffs_.emplace(MultiIndex(var_count), std::move(c));
    return s;
}

TruncatedSeries TruncatedSeries::one(std::size_t var_count, unsigned degree_cap) {
    return constant(var_count, degree_cap, Rational(1));
}

TruncatedSeries TruncatedSeries::variable(std::size_t var_count, unsigned degree_cap,
                                          std::size_t var) {
    return monomial(var_count, degree_cap, MultiIndex::unit(var_count, var), Rational(1));
}

TruncatedSeries TruncatedSeries::monomial(std::size_t var_count, unsigned degree_cap,
                                          const MultiIndex& exponents, Rational c) {
    TruncatedSeries s(var_count, degree_cap);
    s.set_coeff(exponents, c);
    return s;
}

Rational TruncatedSeries::coeff(const MultiIndex& n) const {
    if (n.size() != var_count_) throw std::invalid_argument("multi-index length mismatch");
    if (n.degree() > degree_cap_)
        throw std::out_of_range("coefficient degree exceeds truncation cap");
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::coeff_factorial(const MultiIndex& n) const {
    return factorial_product(n) * coeff(n);
}

Rational TruncatedSeries::constant_term() const {
    return coeff(MultiIndex(var_count_));
}

void TruncatedSeries::set_coeff(const MultiIndex& n, const Rational& c) {
    if (n.size() != var_count_) throw std::invalid_argument("multi-index length mismatch");
    if (n.degree() > degree_cap_)
        throw std::out_of_range("term degree exceeds truncation cap");
    if (c.is_zero())
        coeffs_.erase(n);
    else
        coeffs_[n] = c;
}

void TruncatedSeries::add_to_coeff(const MultiIndex& n, const Rational& c) {
    if (n.size() != var_count_) throw std::invalid_argument("multi-index length mismatch");
    if (n.degree() > degree_cap_)
        throw std::out_of_range("term degree exceeds truncation cap");
    auto [it, inserted] = coeffs_.emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    } else if (it->second.is_zero()) {
        coeffs_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::with_cap(unsigned new_cap) const {
    TruncatedSeries out(var_count_, new_cap);
    for (const auto& [e, c] : coeffs_) {
        if (e.degree() > new_cap) break;  // graded order: everything after is larger
        out.coeffs_.emplace(e, c);
    }
    return out;
}

void TruncatedSeries::require_same_shape(const TruncatedSeries& o) const {
    if (var_count_ != o.var_count_ || degree_cap_ != o.degree_cap_)
        throw std::invalid_argument("series shape mismatch (variable count or cap)");
}

void TruncatedSeries::prune_zeros() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second.is_zero())
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(var_count_, degree_cap_);
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_same_shape(o);
    for (const auto& [e, c] : o.coeffs_) {
        auto [it, inserted] = coeffs_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_same_shape(o);
    for (const auto& [e, c] : o.coeffs_) {
        auto [it, inserted] = coeffs_.emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_shape(b);
    TruncatedSeries out(a.var_count_, a.degree_cap_);
    for (const auto& [ea, ca] : a.coeffs_) {
        unsigned da = ea.degree();
        for (const auto& [eb, cb] : b.coeffs_) {
            if (da + eb.degree() > a.degree_cap_) break;  // b is sorted by degree
            out.add_to_coeff(ea + eb, ca * cb);
        }
    }
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c) {
    TruncatedSeries out(a.var_count_, a.degree_cap_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : a.coeffs_) out.coeffs_.emplace(e, v * c);
    return out;
}

TruncatedSeries operator/(const TruncatedSeries& a, const Rational& c) {
    if (c.is_zero()) throw std::domain_error("series division by zero scalar");
    return a * (Rational(1) / c);
}

TruncatedSeries TruncatedSeries::pow(unsigned long e) const {
    TruncatedSeries out = one(var_count_, degree_cap_);
    TruncatedSeries base = *this;
    // square-and-multiply; exact, and harmless for huge exponents because
    // powers of a constant-free series vanish past the cap
    while (e != 0) {
        if (e & 1) out = out * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return out;
}

TruncatedSeries TruncatedSeries::derive(std::size_t var) const {
    if (var >= var_count_) throw std::out_of_range("derivative variable index out of range");
    TruncatedSeries out(var_count_, degree_cap_);
    for (const auto& [e, c] : coeffs_) {
        if (e[var] == 0) continue;
        MultiIndex shifted = e;
        shifted[var] -= 1;
        out.coeffs_.emplace(shifted, c * Rational(static_cast<long>(e[var])));
    }
    return out;
}

TruncatedSeries TruncatedSeries::compose(const SeriesVector& inner) const {
    if (inner.size() != var_count_)
        throw std::invalid_argument("composition arity mismatch");
    if (inner.var_count() != var_count_ || inner.degree_cap() != degree_cap_)
        throw std::invalid_argument("series shape mismatch (variable count or cap)");
    if (!inner.all_zero_constant_term())
        throw std::domain_error("composition requires zero constant terms in the inner series");

    // power cache per variable, grown on demand
    std::vector<std::vector<TruncatedSeries>> powers(var_count_);
    auto power_of = [&](std::size_t j, unsigned e) -> const TruncatedSeries& {
        auto& cache = powers[j];
        if (cache.empty()) cache.push_back(one(var_count_, degree_cap_));
        while (cache.size() <= e) cache.push_back(cache.back() * inner[j]);
        return cache[e];
    };

    TruncatedSeries out(var_count_, degree_cap_);
    for (const auto& [e, c] : coeffs_) {
        TruncatedSeries term = one(var_count_, degree_cap_);
        bool first = true;
        for (std::size_t j = 0; j < var_count_; ++j) {
            if (e[j] == 0) continue;
            term = first ? power_of(j, e[j]) : term * power_of(j, e[j]);
            first = false;
        }
        out += term * c;
    }
    return out;
}

TruncatedSeries TruncatedSeries::invert_unit() const {
    Rational c = constant_term();
    if (c.is_zero())
        throw std::domain_error("cannot invert a series with zero constant term");
    Rational c_inv = Rational(1) / c;
    TruncatedSeries unit = one(var_count_, degree_cap_);
    TruncatedSeries tail = unit - (*this) * c_inv;  // zero constant term
    TruncatedSeries acc = unit;
    for (unsigned k = 0; k < degree_cap_; ++k) acc = unit + tail * acc;
    return acc * c_inv;
}

TruncatedSeries TruncatedSeries::exp() const {
    if (!constant_term().is_zero())
        throw std::domain_error("exp requires zero constant term");
    TruncatedSeries out = one(var_count_, degree_cap_);
    TruncatedSeries term = one(var_count_, degree_cap_);
    for (unsigned k = 1; k <= degree_cap_; ++k) {
        term = term * (*this) / Rational(static_cast<long>(k));
        out += term;
    }
    return out;
}

TruncatedSeries TruncatedSeries::log() const {
    if (!constant_term().is_one())
        throw std::domain_error("log requires constant term 1");
    TruncatedSeries u = one(var_count_, degree_cap_) - *this;  // zero constant term
    TruncatedSeries out(var_count_, degree_cap_);
    TruncatedSeries power = one(var_count_, degree_cap_);
    for (unsigned k = 1; k <= degree_cap_; ++k) {
        power = power * u;
        out -= power / Rational(static_cast<long>(k));
    }
    return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return var_count_ == o.var_count_ && degree_cap_ == o.degree_cap_ && coeffs_ == o.coeffs_;
}

std::string TruncatedSeries::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : coeffs_) {
        bool negative = c.sign() < 0;
        Rational mag = c.abs();
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";

        std::string mono;
        for (std::size_t j = 0; j < var_count_; ++j) {
            if (e[j] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += 'x' + std::to_string(j + 1);
            if (e[j] > 1) mono += '^' + std::to_string(e[j]);
        }
        if (mono.empty()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += mag.str() + '*' + mono;
        }
    }
    return out;
}

bool equal_up_to_degree(const TruncatedSeries& a, const TruncatedSeries& b, unsigned max_degree) {
    if (a.var_count() != b.var_count()) return false;
    for (const auto& [e, c] : a.terms()) {
        if (e.degree() > max_degree) break;
        if (b.coeff(e) != c) return false;
    }
    for (const auto& [e, c] : b.terms()) {
        if (e.degree() > max_degree) break;
        if (a.coeff(e) != c) return false;
    }
    return true;
}

SeriesVector::SeriesVector(std::vector<TruncatedSeries> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("series vector must not be empty");
    std::size_t m = entries_.size();
    for (const auto& s : entries_) {
        if (s.var_count() != m)
            throw std::invalid_argument("series vector length must equal the variable count");
        if (s.degree_cap() != entries_.front().degree_cap())
            throw std::invalid_argument("series vector entries must share one truncation cap");
    }
}

SeriesVector SeriesVector::zero(std::size_t var_count, unsigned degree_cap) {
    return SeriesVector(
        std::vector<TruncatedSeries>(var_count, TruncatedSeries(var_count, degree_cap)));
}

SeriesVector SeriesVector::variables(std::size_t var_count, unsigned degree_cap) {
    std::vector<TruncatedSeries> entries;
    entries.reserve(var_count);
    for (std::size_t i = 0; i < var_count; ++i)
        entries.push_back(TruncatedSeries::variable(var_count, degree_cap, i));
    return SeriesVector(std::move(entries));
}

std::size_t SeriesVector::var_count() const { return entries_.front().var_count(); }

unsigned SeriesVector::degree_cap() const { return entries_.front().degree_cap(); }

bool SeriesVector::all_zero_constant_term() const {
    for (const auto& s : entries_)
        if (!s.constant_term().is_zero()) return false;
    return true;
}

SeriesVector SeriesVector::with_cap(unsigned new_cap) const {
    std::vector<TruncatedSeries> entries;
    entries.reserve(entries_.size());
    for (const auto& s : entries_) entries.push_back(s.with_cap(new_cap));
    return SeriesVector(std::move(entries));
}

}  // namespace lginv
