#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qpos/int.hpp"

namespace qpos {

// Dense truncated formal power series over the integers: exact coefficients
// of q^0 .. q^order, everything above silently unknown. All operations are
// lower-triangular (coefficient j of the result depends only on coefficients
// <= j of the inputs), so truncation commutes with arithmetic.
class TruncSeries {
public:
    // The zero series of the given truncation order.
    explicit TruncSeries(std::size_t order) : c_(order + 1) {}

    static TruncSeries one(std::size_t order);
    static TruncSeries monomial(std::size_t exponent, std::size_t order);

    std::size_t order() const { return c_.size() - 1; }

    const Int& operator[](std::size_t j) const { return c_[j]; }
    Int& operator[](std::size_t j) { return c_[j]; }

    std::span<const Int> coeffs() const { return c_; }

    bool operator==(const TruncSeries&) const = default;

private:
    std::vector<Int> c_;
};

// Polynomial with exact integer coefficients, normalized so the coefficient
// sequence never ends in a zero; the zero polynomial is the empty sequence.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial one();
    static IntPolynomial monomial(Int coeff, std::size_t exponent);

    bool is_zero() const { return c_.empty(); }
    // Highest exponent with nonzero coefficient; meaningless for zero.
    std::size_t degree() const;
    std::size_t size() const { return c_.size(); }

    // Coefficient of q^j, zero beyond the stored range.
    const Int& coeff(std::size_t j) const;
    std::span<const Int> coeffs() const { return c_; }

    TruncSeries to_series(std::size_t order) const;

    bool operator==(const IntPolynomial&) const = default;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

private:
    std::vector<Int> c_;
};

// r = a + s * q^e * b, truncated to order min(order(a), order(b) + e).
TruncSeries axpy_shift(const TruncSeries& a, const TruncSeries& b, const Int& s,
                       std::size_t e);

// Truncated Cauchy product, order min(order(a), order(b)).
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);

// Multiplicative inverse; requires |a_0| = 1 (throws std::invalid_argument
// with "non-unit constant term" otherwise).
TruncSeries invert(const TruncSeries& a);

// Exact quotient of polynomials over Z. Throws internal_error if the divisor
// is zero or the division leaves a remainder: every call site divides
// quantities that are divisible by construction, so a remainder means the
// implementation is broken, not the input.
IntPolynomial divexact(const IntPolynomial& num, const IntPolynomial& den);

// Running sums s_j = p_0 + ... + p_j for j = 0..degree (empty for zero).
std::vector<Int> prefix_sums(const IntPolynomial& p);

// In-place helpers for the ubiquitous two-term factors (1 - s q^e), s = +-1.
// All O(order); e >= 1.
void mul_one_minus(TruncSeries& a, int sign, std::size_t e);   // a *= (1 - s q^e)
void div_one_minus(TruncSeries& a, int sign, std::size_t e);   // a /= (1 - s q^e)

void shift_up(TruncSeries& a, std::size_t e);                  // a *= q^e, truncated
void add_in_place(TruncSeries& a, const TruncSeries& b);       // equal orders
void sub_in_place(TruncSeries& a, const TruncSeries& b);       // equal orders
void negate(TruncSeries& a);
void scale(TruncSeries& a, const Int& s);

} // namespace qpos
