#pragma once

// Shared generators for the property-style tests. Everything is seeded, so
// failures reproduce deterministically.

#include "lginv/series.hpp"

#include <random>

namespace lginv::testing {

inline Rational random_rational(std::mt19937_64& rng, long num_range = 3, long den_max = 3) {
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_max);
    return Rational(num(rng), den(rng));
}

// Random series with support of total degree <= support_degree (default: the
// cap). Roughly half the candidate coefficients are zero.
inline TruncatedSeries random_series(std::mt19937_64& rng, std::size_t m, unsigned cap,
                                     int support_degree = -1) {
    unsigned degree = support_degree < 0 ? cap : static_cast<unsigned>(support_degree);
    TruncatedSeries s(m, cap);
    std::bernoulli_distribution keep(0.5);
    for (const MultiIndex& e : indices_up_to_degree(m, degree))
        if (keep(rng)) s.set_coeff(e, random_rational(rng));
    return s;
}

inline TruncatedSeries random_zero_constant_series(std::mt19937_64& rng, std::size_t m,
                                                   unsigned cap) {
    TruncatedSeries s = random_series(rng, m, cap);
    s.set_coeff(MultiIndex(m), Rational(0));
    return s;
}

inline SeriesVector random_zero_constant_vector(std::mt19937_64& rng, std::size_t m,
                                                unsigned cap) {
    std::vector<TruncatedSeries> entries;
    for (std::size_t i = 0; i < m; ++i)
        entries.push_back(random_zero_constant_series(rng, m, cap));
    return SeriesVector(std::move(entries));
}

}  // namespace lginv::testing
