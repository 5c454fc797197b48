#pragma once

#include <cstdint>
#include <optional>

#include "qpos/series.hpp"

namespace qpos {

// A signed power of q: sign * q^exponent with sign in {+1, -1} and a
// non-negative exponent. This is the only shape of Pochhammer parameter the
// core supports, which keeps all series Laurent-free by construction;
// negative-exponent parameters are rearranged by the caller (see the Heine
// evaluator) before they reach this layer.
struct SignedMonomial {
    int sign = 1;
    std::size_t exponent = 0;

    bool operator==(const SignedMonomial&) const = default;
};

constexpr SignedMonomial q_pow(std::size_t e) { return {+1, e}; }
constexpr SignedMonomial neg_q_pow(std::size_t e) { return {-1, e}; }

// (a; q^step)_length = prod_{j=0}^{length-1} (1 - a q^{step j}); length
// nullopt means the infinite product (which truncates after finitely many
// factors at any fixed order). step >= 1.
struct PochSpec {
    SignedMonomial param;
    unsigned step = 1;
    std::optional<std::uint64_t> length;
};

// (1; q^step)_inf vanishes identically from its first factor. Representable,
// but worth asking about before dividing by it.
bool is_degenerate(const PochSpec& spec);

TruncSeries poch(const PochSpec& spec, std::size_t order);

// The finite product as an exact polynomial.
IntPolynomial poch_poly(SignedMonomial a, unsigned step, std::uint64_t length);

// Gaussian binomial [n over m] in base q^step, computed as a quotient of
// q-factorials by exact division (any remainder throws internal_error).
// Zero for m outside [0, n]; degree step*m*(n-m) otherwise.
IntPolynomial gauss(std::uint64_t n, std::int64_t m, unsigned step);

// [n over m] base q^step as a truncated series, via the m-factor product
// form: O(m * order), far cheaper than the exact polynomial when only low
// coefficients are wanted. Requires 0 <= m <= n.
TruncSeries gauss_series(std::uint64_t n, std::uint64_t m, unsigned step,
                         std::size_t order);

} // namespace qpos
